// ontoseg: annotate, segment, evaluate, generate Choi-style datasets and run
// the alpha x window benchmark grid.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ontoseg/annotation.hpp"
#include "ontoseg/dataset.hpp"
#include "ontoseg/experiment.hpp"
#include "ontoseg/metrics.hpp"
#include "ontoseg/segmentation.hpp"
#include "ontoseg/taxonomy.hpp"
#include "ontoseg/textprep.hpp"

namespace fs = std::filesystem;
using namespace ontoseg;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kData = 2, kRemote = 3 };

struct AnnotationSource {
  std::string sidecar;
  std::string gazetteer;
  std::string endpoint;
  double confidence = 0.5;

  void add_to(CLI::App* cmd, bool allow_sidecar) {
    if (allow_sidecar) {
      cmd->add_option("--annotations", sidecar, "Annotation sidecar (JSON lines) for the input document");
    }
    cmd->add_option("--gazetteer", gazetteer, "Annotate with a surface -> classes dictionary (JSON)");
    cmd->add_option("--endpoint", endpoint,
                    std::string("Annotate through a remote service (http://host:port/path); defaults to $") +
                        kEndpointEnvVar);
    cmd->add_option("--confidence", confidence, "Confidence sent to the remote annotator")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
  }

  AnnotatedDocument annotate(const std::string& doc_id, const std::vector<std::string>& sentences) const {
    const int chosen = !sidecar.empty() + !gazetteer.empty() + !endpoint.empty();
    if (chosen > 1) throw ConfigError("choose one of --annotations, --gazetteer, --endpoint");
    if (!sidecar.empty()) return load_annotations(doc_id, sentences, fs::path(sidecar));
    if (!gazetteer.empty()) return gazetteer_annotate(doc_id, sentences, load_gazetteer(gazetteer));
    std::string url = endpoint;
    if (url.empty()) {
      const char* env = std::getenv(kEndpointEnvVar);
      if (env == nullptr || *env == '\0') {
        throw ConfigError(std::string("no annotation source: pass --annotations, --gazetteer or --endpoint, or set ") +
                          kEndpointEnvVar);
      }
      url = env;
    }
    RemoteOptions options;
    options.endpoint = url;
    options.confidence = confidence;
    return remote_annotate(doc_id, sentences, options);
  }
};

// Writes to the named file, or stdout for "" and "-".
template <typename Fn>
void emit(const std::string& path, Fn write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  write(out);
}

StopwordSet stopwords_from(const std::string& path) {
  return path.empty() ? default_stopwords() : load_stopwords(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ontology-based text segmentation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ontoseg 0.1.0");

  // annotate
  auto* annotate = app.add_subcommand("annotate", "Write an annotation sidecar for a document");
  std::string ann_input;
  std::string ann_output;
  AnnotationSource ann_source;
  annotate->add_option("--input", ann_input, "Document: one sentence per line, Choi markers allowed")
      ->required();
  annotate->add_option("--output,-o", ann_output, "Sidecar path (default: stdout)");
  ann_source.add_to(annotate, false);

  // segment
  auto* segment = app.add_subcommand("segment", "Segment one document");
  std::string seg_input;
  std::string seg_taxonomy;
  std::string seg_output;
  std::string seg_tree;
  std::string seg_format = "linear";
  std::string seg_stopwords;
  double seg_alpha = 0.0;
  std::size_t seg_window = 1;
  std::size_t seg_k = 10;
  AnnotationSource seg_source;
  segment->add_option("--input", seg_input, "Document: one sentence per line, Choi markers allowed")->required();
  segment->add_option("--taxonomy", seg_taxonomy, "Taxonomy (JSON)")->required();
  segment->add_option("--alpha", seg_alpha, "Lexical weight; 0 = ontological similarity only")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  segment->add_option("--window", seg_window, "Sentences per elementary block")
      ->capture_default_str()
      ->check(CLI::Range(1, 4));
  segment->add_option("--segments,-k", seg_k, "Number of segments to produce")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  segment->add_option("--format", seg_format, "Main output: linear | choi | tree")
      ->capture_default_str()
      ->check(CLI::IsMember({"linear", "choi", "tree"}));
  segment->add_option("--output,-o", seg_output, "Main output path (default: stdout)");
  segment->add_option("--tree-output", seg_tree, "Also write the dendrogram (JSON) here");
  segment->add_option("--stopwords", seg_stopwords, "Stopword file (default: bundled English list)");
  seg_source.add_to(segment, true);

  // eval
  auto* eval = app.add_subcommand("eval", "Score hypothesis segmentations against references");
  std::string eval_ref;
  std::string eval_hyp;
  std::string eval_output;
  std::size_t eval_k = 0;
  eval->add_option("--ref", eval_ref, "Directory of reference documents (Choi format)")->required();
  eval->add_option("--hyp", eval_hyp, "Directory of hypotheses, matched by file stem")->required();
  eval->add_option("--k", eval_k, "Fixed window width (default: half the mean reference segment length)")
      ->check(CLI::PositiveNumber);
  eval->add_option("--output,-o", eval_output, "Report path (default: stdout)");

  // gen-dataset
  auto* gen = app.add_subcommand("gen-dataset", "Generate Choi-style documents from a source corpus");
  std::string gen_corpus;
  std::string gen_output;
  GenSpec gen_spec;
  std::string gen_range = "3-11";
  gen->add_option("--corpus", gen_corpus, "Directory of source documents, one sentence per line")->required();
  gen->add_option("--output,-o", gen_output, "Directory for the generated <id>.ref files")->required();
  gen->add_option("--segments", gen_spec.num_segments, "Segments per document")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  gen->add_option("--n-range", gen_range, "Sentences per segment, MIN-MAX")->capture_default_str();
  gen->add_option("--samples", gen_spec.samples, "Documents to generate")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_spec.seed, "Random seed")->capture_default_str();
  gen->add_option("--prefix", gen_spec.id_prefix, "Document id prefix")->capture_default_str();

  // bench
  auto* bench = app.add_subcommand("bench", "Run the alpha x window grid over generated subsets");
  std::string bench_corpus;
  std::string bench_taxonomy;
  std::string bench_gazetteer;
  std::string bench_output;
  std::string bench_format = "table";
  std::string bench_stopwords;
  std::vector<std::string> bench_subsets{"3-11:400", "3-5:100", "6-8:100", "9-11:100"};
  BenchConfig bench_cfg;
  bench->add_option("--corpus", bench_corpus, "Directory of source documents")->required();
  bench->add_option("--taxonomy", bench_taxonomy, "Taxonomy (JSON)")->required();
  bench->add_option("--gazetteer", bench_gazetteer, "Gazetteer used to annotate generated documents")->required();
  bench->add_option("--subsets", bench_subsets, "Subsets as MIN-MAX:SAMPLES")->capture_default_str()->delimiter(',');
  bench->add_option("--alphas", bench_cfg.alphas, "Lexical weights")
      ->capture_default_str()
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  bench->add_option("--windows", bench_cfg.windows, "Block sizes")
      ->capture_default_str()
      ->delimiter(',')
      ->check(CLI::Range(1, 4));
  bench->add_option("--segments", bench_cfg.num_segments, "Segments per document, also the cut size")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_cfg.seed, "Random seed")->capture_default_str();
  bench->add_option("--jobs,-j", bench_cfg.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  bench->add_option("--format", bench_format, "table | tsv")
      ->capture_default_str()
      ->check(CLI::IsMember({"table", "tsv"}));
  bench->add_option("--output,-o", bench_output, "Report path (default: stdout)");
  bench->add_option("--stopwords", bench_stopwords, "Stopword file (default: bundled English list)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*annotate) {
      const auto doc = read_choi(fs::path(ann_input));
      const auto annotated = ann_source.annotate(doc.doc_id, doc.sentences());
      emit(ann_output, [&](std::ostream& out) { save_annotations(annotated, out); });
    } else if (*segment) {
      const SimilarityWeights weights(seg_alpha);
      const Taxonomy taxonomy = load_taxonomy(seg_taxonomy);
      const StopwordSet stopwords = stopwords_from(seg_stopwords);
      const auto doc = read_choi(fs::path(seg_input));
      const auto sentences = doc.sentences();
      const auto annotated = seg_source.annotate(doc.doc_id, sentences);
      const auto result = segment_document(annotated, taxonomy, weights, {seg_window}, seg_k, stopwords);
      const auto segmented = apply_segmentation(doc.doc_id, sentences, result.segmentation);
      emit(seg_output, [&](std::ostream& out) {
        if (seg_format == "tree") {
          write_dendrogram(result.dendrogram, out);
        } else if (seg_format == "choi") {
          write_choi(segmented, out);
        } else {
          write_linear(segmented, out);
        }
      });
      if (!seg_tree.empty()) emit(seg_tree, [&](std::ostream& out) { write_dendrogram(result.dendrogram, out); });
    } else if (*eval) {
      EvalConfig cfg;
      if (eval_k > 0) cfg = {KPolicy::kFixed, eval_k};
      const auto report = evaluate_directories(eval_ref, eval_hyp, cfg);
      emit(eval_output, [&](std::ostream& out) { write_report(report, out); });
    } else if (*gen) {
      const Subset range = parse_subset(gen_range + ":1");
      gen_spec.n_min = range.n_min;
      gen_spec.n_max = range.n_max;
      const auto corpus = load_corpus(gen_corpus);
      const auto docs = generate(corpus, gen_spec);
      fs::create_directories(gen_output);
      for (const auto& d : docs) write_choi(d, fs::path(gen_output) / (d.doc_id + ".ref"));
    } else if (*bench) {
      bench_cfg.subsets.clear();
      for (const auto& s : bench_subsets) bench_cfg.subsets.push_back(parse_subset(s));
      const Taxonomy taxonomy = load_taxonomy(bench_taxonomy);
      const Gazetteer gazetteer = load_gazetteer(bench_gazetteer);
      const StopwordSet stopwords = stopwords_from(bench_stopwords);
      const auto corpus = load_corpus(bench_corpus);
      const auto report = run_bench(corpus, gazetteer, taxonomy, bench_cfg, stopwords);
      emit(bench_output, [&](std::ostream& out) {
        if (bench_format == "tsv") {
          write_bench_tsv(report, out);
        } else {
          write_bench_table(report, out);
        }
      });
    }
  } catch (const ConfigError& e) {
    std::cerr << "ontoseg: " << e.what() << '\n';
    return kUsage;
  } catch (const RemoteError& e) {
    std::cerr << "ontoseg: " << e.what() << '\n';
    return kRemote;
  } catch (const std::exception& e) {
    std::cerr << "ontoseg: " << e.what() << '\n';
    return kData;
  }
  return kOk;
}
