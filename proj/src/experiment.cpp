#include "ontoseg/experiment.hpp"

#include <atomic>
#include <charconv>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "ontoseg/segmentation.hpp"

namespace ontoseg {

std::vector<Subset> choi_subsets() {
  return {{"3-11", 3, 11, 400}, {"3-5", 3, 5, 100}, {"6-8", 6, 8, 100}, {"9-11", 9, 11, 100}};
}

namespace {

std::size_t parse_count(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError("bad subset '" + std::string(whole) + "', expected MIN-MAX:SAMPLES");
  }
  return value;
}

std::uint64_t subset_seed(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), 0x5eedu};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

// Runs body(i) for i in [0, count) on up to jobs threads; rethrows the first
// failure.
template <typename Body>
void parallel_for(std::size_t count, std::size_t jobs, Body body) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

Subset parse_subset(std::string_view text) {
  const auto dash = text.find('-');
  const auto colon = text.find(':');
  if (dash == std::string_view::npos || colon == std::string_view::npos || colon < dash) {
    throw ConfigError("bad subset '" + std::string(text) + "', expected MIN-MAX:SAMPLES");
  }
  Subset s;
  s.name = std::string(text.substr(0, colon));
  s.n_min = parse_count(text.substr(0, dash), text);
  s.n_max = parse_count(text.substr(dash + 1, colon - dash - 1), text);
  s.samples = parse_count(text.substr(colon + 1), text);
  if (s.n_min < 1 || s.n_max < s.n_min || s.samples < 1) {
    throw ConfigError("bad subset '" + std::string(text) + "': need 1 <= MIN <= MAX and SAMPLES >= 1");
  }
  return s;
}

const BenchCell& BenchReport::at(std::size_t alpha, std::size_t window, std::size_t subset) const {
  return cells.at((alpha * windows.size() + window) * subsets.size() + subset);
}

BenchReport run_bench(const SourceCorpus& corpus, const Gazetteer& gazetteer, const Taxonomy& taxonomy,
                      const BenchConfig& config, const StopwordSet& stopwords) {
  if (config.subsets.empty() || config.alphas.empty() || config.windows.empty()) {
    throw ConfigError("bench grid is empty");
  }
  std::vector<SimilarityWeights> weights;
  for (double a : config.alphas) weights.emplace_back(a);
  for (std::size_t w : config.windows) {
    if (w < 1) throw ConfigError("window sizes must be at least 1");
  }

  struct Doc {
    std::size_t subset;
    AnnotatedDocument annotated;
    Segmentation reference;
    std::size_t eval_k;
  };
  std::vector<Doc> docs;
  for (std::size_t si = 0; si < config.subsets.size(); ++si) {
    const auto& sub = config.subsets[si];
    GenSpec spec{config.num_segments, sub.n_min, sub.n_max, sub.samples, subset_seed(config.seed, si), sub.name};
    for (const auto& d : generate(corpus, spec)) {
      Segmentation ref = reference_segmentation(d);
      const std::size_t k = choose_k(std::span<const Segmentation>(&ref, 1));
      docs.push_back({si, gazetteer_annotate(d.doc_id, d.sentences(), gazetteer), std::move(ref), k});
    }
  }

  // scores[(window * docs + doc) * alphas + alpha]
  struct Score {
    double wd = 0.0;
    double pk = 0.0;
    bool capped = false;
  };
  const std::size_t na = config.alphas.size();
  std::vector<Score> scores(config.windows.size() * docs.size() * na);
  parallel_for(config.windows.size() * docs.size(), config.jobs, [&](std::size_t task) {
    const std::size_t wi = task / docs.size();
    const Doc& doc = docs[task % docs.size()];
    const auto blocks = make_blocks(doc.annotated, {config.windows[wi]}, stopwords);
    const std::size_t k = std::min(config.num_segments, blocks.size());
    for (std::size_t ai = 0; ai < na; ++ai) {
      const Segmentation hyp = flatten(build_dendrogram(blocks, taxonomy, weights[ai]), k);
      scores[task * na + ai] = {window_diff_score(doc.reference, hyp, doc.eval_k),
                                pk_score(doc.reference, hyp, doc.eval_k), k < config.num_segments};
    }
  });

  BenchReport report;
  for (const auto& s : config.subsets) report.subsets.push_back(s.name);
  report.alphas = config.alphas;
  report.windows = config.windows;
  for (std::size_t ai = 0; ai < na; ++ai) {
    for (std::size_t wi = 0; wi < config.windows.size(); ++wi) {
      for (std::size_t si = 0; si < config.subsets.size(); ++si) {
        BenchCell cell{config.subsets[si].name, config.alphas[ai], config.windows[wi]};
        for (std::size_t di = 0; di < docs.size(); ++di) {
          if (docs[di].subset != si) continue;
          const Score& s = scores[(wi * docs.size() + di) * na + ai];
          cell.window_diff += s.wd;
          cell.pk += s.pk;
          cell.capped += s.capped ? 1 : 0;
          ++cell.documents;
        }
        cell.window_diff /= static_cast<double>(cell.documents);
        cell.pk /= static_cast<double>(cell.documents);
        report.cells.push_back(std::move(cell));
      }
    }
  }
  return report;
}

namespace {

void write_metric_table(const BenchReport& r, std::ostream& out, const char* title, bool wd) {
  char buf[64];
  out << title << '\n';
  for (std::size_t ai = 0; ai < r.alphas.size(); ++ai) {
    std::snprintf(buf, sizeof buf, "alpha = %g", r.alphas[ai]);
    out << buf << '\n';
    std::snprintf(buf, sizeof buf, "%-22s", "Window \\ Range of n");
    out << buf;
    for (const auto& s : r.subsets) {
      std::snprintf(buf, sizeof buf, "%8s", s.c_str());
      out << buf;
    }
    out << '\n';
    for (std::size_t wi = 0; wi < r.windows.size(); ++wi) {
      std::snprintf(buf, sizeof buf, "W = %-18zu", r.windows[wi]);
      out << buf;
      for (std::size_t si = 0; si < r.subsets.size(); ++si) {
        const auto& c = r.at(ai, wi, si);
        std::snprintf(buf, sizeof buf, "%8.4f", wd ? c.window_diff : c.pk);
        out << buf;
      }
      out << '\n';
    }
    out << '\n';
  }
}

}  // namespace

void write_bench_table(const BenchReport& report, std::ostream& out) {
  write_metric_table(report, out, "WindowDiff error rates", true);
  write_metric_table(report, out, "Pk error rates", false);
}

void write_bench_tsv(const BenchReport& report, std::ostream& out) {
  char buf[96];
  out << "subset\talpha\twindow\twd\tpk\tdocuments\tcapped\n";
  for (const auto& c : report.cells) {
    std::snprintf(buf, sizeof buf, "\t%g\t%zu\t%.6f\t%.6f\t%zu\t%zu\n", c.alpha, c.window, c.window_diff, c.pk,
                  c.documents, c.capped);
    out << c.subset << buf;
  }
}

EvalReport evaluate_directories(const std::filesystem::path& ref_dir, const std::filesystem::path& hyp_dir,
                                const EvalConfig& cfg) {
  namespace fs = std::filesystem;
  auto index = [](const fs::path& dir) {
    if (!fs::is_directory(dir)) throw ConfigError("directory " + dir.string() + " does not exist");
    std::map<std::string, fs::path> files;
    for (const auto& e : fs::directory_iterator(dir)) {
      if (!e.is_regular_file()) continue;
      auto [it, fresh] = files.emplace(e.path().stem().string(), e.path());
      if (!fresh) throw DataError("two files for document '" + it->first + "' in " + dir.string());
    }
    return files;
  };
  const auto refs = index(ref_dir);
  const auto hyps = index(hyp_dir);
  for (const auto& [id, path] : hyps) {
    if (!refs.contains(id)) throw DataError("hypothesis '" + id + "' has no reference document");
  }
  std::vector<ScoredPair> pairs;
  for (const auto& [id, path] : refs) {
    auto it = hyps.find(id);
    if (it == hyps.end()) throw DataError("no hypothesis for document '" + id + "'");
    pairs.push_back({id, reference_segmentation(read_choi(path)), reference_segmentation(read_choi(it->second))});
  }
  return evaluate(pairs, cfg);
}

}  // namespace ontoseg
