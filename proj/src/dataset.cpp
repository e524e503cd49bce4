#include "ontoseg/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>

#include "ontoseg/error.hpp"

namespace ontoseg {

std::vector<std::string> SegmentedDocument::sentences() const {
  std::vector<std::string> out;
  for (const auto& seg : segments) out.insert(out.end(), seg.begin(), seg.end());
  return out;
}

std::size_t SegmentedDocument::sentence_count() const {
  std::size_t n = 0;
  for (const auto& seg : segments) n += seg.size();
  return n;
}

namespace {

bool is_blank(std::string_view line) { return line.find_first_not_of(" \t") == std::string_view::npos; }

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace

SegmentedDocument read_choi(std::istream& in, std::string doc_id) {
  SegmentedDocument doc{std::move(doc_id), {}};
  std::vector<std::string> current;
  for (auto& line : read_lines(in)) {
    if (line == kBoundaryMarker) {
      if (!current.empty()) doc.segments.push_back(std::move(current));
      current.clear();
    } else if (!is_blank(line)) {
      current.push_back(std::move(line));
    }
  }
  if (!current.empty()) doc.segments.push_back(std::move(current));
  if (doc.segments.empty()) throw DataError("document '" + doc.doc_id + "' contains no sentences");
  return doc;
}

SegmentedDocument read_choi(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open document " + path.string());
  return read_choi(in, path.stem().string());
}

void write_choi(const SegmentedDocument& doc, std::ostream& out) {
  out << kBoundaryMarker << '\n';
  for (const auto& seg : doc.segments) {
    for (const auto& s : seg) out << s << '\n';
    out << kBoundaryMarker << '\n';
  }
}

void write_choi(const SegmentedDocument& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  write_choi(doc, out);
}

void write_linear(const SegmentedDocument& doc, std::ostream& out) {
  for (std::size_t i = 0; i < doc.segments.size(); ++i) {
    if (i > 0) out << kBoundaryMarker << '\n';
    for (const auto& s : doc.segments[i]) out << s << '\n';
  }
}

SegmentedDocument apply_segmentation(std::string doc_id, const std::vector<std::string>& sentences,
                                     const Segmentation& segmentation) {
  if (sentences.size() != segmentation.sentence_count()) {
    throw DataError("segmentation covers " + std::to_string(segmentation.sentence_count()) +
                    " sentences, document has " + std::to_string(sentences.size()));
  }
  SegmentedDocument doc{std::move(doc_id), {}};
  std::size_t begin = 0;
  for (std::size_t len : segmentation.segment_lengths()) {
    doc.segments.emplace_back(sentences.begin() + static_cast<std::ptrdiff_t>(begin),
                              sentences.begin() + static_cast<std::ptrdiff_t>(begin + len));
    begin += len;
  }
  return doc;
}

Segmentation reference_segmentation(const SegmentedDocument& doc) {
  std::vector<std::size_t> lengths;
  for (const auto& seg : doc.segments) lengths.push_back(seg.size());
  return Segmentation::from_lengths(lengths);
}

SourceCorpus load_corpus(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw ConfigError("corpus directory " + dir.string() + " does not exist");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  SourceCorpus corpus;
  for (const auto& f : files) {
    std::ifstream in(f);
    if (!in) throw ConfigError("cannot open corpus file " + f.string());
    std::vector<std::string> sentences;
    for (auto& line : read_lines(in)) {
      if (!is_blank(line)) sentences.push_back(std::move(line));
    }
    corpus.names.push_back(f.filename().string());
    corpus.documents.push_back(std::move(sentences));
  }
  return corpus;
}

namespace {

// Uniform draw from [0, bound) by rejection, independent of the standard
// library's distribution implementations.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

std::vector<SegmentedDocument> generate(const SourceCorpus& corpus, const GenSpec& spec) {
  if (spec.num_segments < 1) throw ConfigError("num_segments must be at least 1");
  if (spec.n_min < 1 || spec.n_max < spec.n_min) throw ConfigError("n range must satisfy 1 <= min <= max");
  if (spec.samples < 1) throw ConfigError("samples must be at least 1");
  if (corpus.size() < spec.num_segments) {
    throw DataError("corpus holds " + std::to_string(corpus.size()) + " documents but " +
                    std::to_string(spec.num_segments) + " distinct ones are needed per sample");
  }
  const int width = static_cast<int>(std::to_string(spec.samples - 1).size());
  std::vector<SegmentedDocument> out;
  out.reserve(spec.samples);
  for (std::size_t sample = 0; sample < spec.samples; ++sample) {
    std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32),
                      static_cast<std::uint32_t>(sample), static_cast<std::uint32_t>(sample >> 32)};
    std::mt19937_64 rng(seq);

    std::vector<std::size_t> pool(corpus.size());
    std::iota(pool.begin(), pool.end(), 0);
    SegmentedDocument doc;
    std::string num = std::to_string(sample);
    doc.doc_id = spec.id_prefix + "_" + std::string(static_cast<std::size_t>(width) - num.size(), '0') + num;
    for (std::size_t s = 0; s < spec.num_segments; ++s) {
      const auto pick = s + draw_below(rng, pool.size() - s);
      std::swap(pool[s], pool[pick]);
      const std::size_t source = pool[s];
      const std::size_t n = spec.n_min + draw_below(rng, spec.n_max - spec.n_min + 1);
      const auto& sentences = corpus.documents[source];
      if (sentences.size() < n) {
        throw DataError("source document '" + corpus.names[source] + "' has " + std::to_string(sentences.size()) +
                        " sentences, fewer than the drawn n=" + std::to_string(n));
      }
      doc.segments.emplace_back(sentences.begin(), sentences.begin() + static_cast<std::ptrdiff_t>(n));
    }
    out.push_back(std::move(doc));
  }
  return out;
}

}  // namespace ontoseg
