#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ontoseg/segmentation.hpp"

namespace ontoseg {

// Line separating segments in Choi-format files.
inline constexpr std::string_view kBoundaryMarker = "==========";

struct SegmentedDocument {
  std::string doc_id;
  std::vector<std::vector<std::string>> segments;

  std::vector<std::string> sentences() const;
  std::size_t sentence_count() const;
  friend bool operator==(const SegmentedDocument&, const SegmentedDocument&) = default;
};

// Segments are split on marker lines. Leading, trailing and repeated markers
// are tolerated; blank lines are skipped and '\r' is stripped. DataError when
// no sentence is found.
SegmentedDocument read_choi(std::istream& in, std::string doc_id);
// doc_id is the file stem.
SegmentedDocument read_choi(const std::filesystem::path& path);

// Marker line first, after every segment, and last: a 10-segment document
// carries 9 internal markers plus 2 terminal ones.
void write_choi(const SegmentedDocument& doc, std::ostream& out);
void write_choi(const SegmentedDocument& doc, const std::filesystem::path& path);
// Markers only between segments.
void write_linear(const SegmentedDocument& doc, std::ostream& out);

// Regroups sentences according to a segmentation of the same length.
SegmentedDocument apply_segmentation(std::string doc_id, const std::vector<std::string>& sentences,
                                     const Segmentation& segmentation);

Segmentation reference_segmentation(const SegmentedDocument& doc);

// Plain-text source documents: one per file, one sentence per line.
struct SourceCorpus {
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> documents;

  std::size_t size() const { return documents.size(); }
};

// Regular files of a directory in file-name order. Blank lines are skipped.
SourceCorpus load_corpus(const std::filesystem::path& dir);

struct GenSpec {
  std::size_t num_segments = 10;
  std::size_t n_min = 3;
  std::size_t n_max = 11;
  std::size_t samples = 1;
  std::uint64_t seed = 0;
  std::string id_prefix = "doc";
};

// Each sample concatenates the first n sentences of num_segments distinct
// source documents, n uniform in [n_min, n_max] per segment. Sample i draws
// only from an engine seeded with (seed, i), so output is reproducible.
std::vector<SegmentedDocument> generate(const SourceCorpus& corpus, const GenSpec& spec);

}  // namespace ontoseg
