#pragma once

#include <array>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ontoseg/annotation.hpp"
#include "ontoseg/similarity.hpp"
#include "ontoseg/taxonomy.hpp"
#include "ontoseg/textprep.hpp"

namespace ontoseg {

// A linear segmentation of K sentences. Boundary p means a segment ends
// after sentence p - 1; boundaries are strictly increasing inside (0, K).
class Segmentation {
 public:
  // DataError on K == 0 or on misplaced boundaries.
  Segmentation(std::size_t sentence_count, std::vector<std::size_t> boundaries);
  // DataError on an empty list or a zero length.
  static Segmentation from_lengths(const std::vector<std::size_t>& lengths);

  std::size_t sentence_count() const { return sentence_count_; }
  const std::vector<std::size_t>& boundaries() const { return boundaries_; }
  std::size_t segment_count() const { return boundaries_.size() + 1; }
  std::vector<std::size_t> segment_lengths() const;
  // Segment index of every sentence.
  std::vector<std::size_t> segment_ids() const;

  friend bool operator==(const Segmentation&, const Segmentation&) = default;

 private:
  std::size_t sentence_count_;
  std::vector<std::size_t> boundaries_;
};

struct WindowConfig {
  std::size_t window_size = 1;
};

// Consecutive groups of window_size sentences; the last block takes the
// remainder. ConfigError unless 1 <= window_size <= sentence count.
std::vector<Block> make_blocks(const AnnotatedDocument& doc, WindowConfig cfg,
                               const StopwordSet& stopwords = default_stopwords());

struct DendrogramNode {
  SentenceSpan sentences;
  // Leaf (elementary block) range [first_block, end_block).
  std::size_t first_block = 0;
  std::size_t end_block = 0;
  std::optional<std::array<std::size_t, 2>> children;
  // Merge score and 0-based merge step; meaningful for internal nodes only.
  double similarity = 0.0;
  std::size_t step = 0;

  bool is_leaf() const { return !children.has_value(); }
  std::size_t block_count() const { return end_block - first_block; }
};

struct Merge {
  std::size_t left;
  std::size_t right;
  std::size_t merged;
  double similarity;
  std::size_t step;
};

// Binary merge tree. Nodes [0, leaf_count) are the blocks in text order; the
// node created by merge step s has id leaf_count + s, so the root is last.
struct Dendrogram {
  std::vector<DendrogramNode> nodes;
  std::size_t leaf_count = 0;
  // Pair scores requested while building; not serialized.
  std::size_t similarity_evaluations = 0;

  std::size_t root() const { return nodes.size() - 1; }
  std::size_t sentence_count() const { return nodes.back().sentences.end; }
  std::vector<Merge> merges() const;
};

// Scores and merges clusters addressed by dendrogram node id. The clustering
// loop only ever asks about nodes that are adjacent in text order.
class MergeModel {
 public:
  virtual ~MergeModel() = default;
  virtual double similarity(std::size_t left, std::size_t right) = 0;
  virtual void merge(std::size_t left, std::size_t right, std::size_t merged) = 0;
};

// Order-preserving agglomeration: repeatedly merges the adjacent pair with
// the highest score (leftmost on ties) until one node is left. After a merge
// only the new node's two neighbour pairs are rescored.
Dendrogram agglomerate(const std::vector<SentenceSpan>& leaves, MergeModel& model);

// agglomerate() scored by hybrid_sim over pooled entity profiles and term
// vectors, recomputed from content after every merge.
Dendrogram build_dendrogram(const std::vector<Block>& blocks, const Taxonomy& taxonomy,
                            SimilarityWeights weights);

// Cuts the tree into k segments: starting from the root, repeatedly replaces
// the frontier node covering the most blocks (leftmost on ties) by its two
// children. ConfigError unless 1 <= k <= leaf_count.
Segmentation flatten(const Dendrogram& d, std::size_t k);

struct SegmentResult {
  Dendrogram dendrogram;
  Segmentation segmentation;
};

SegmentResult segment_document(const AnnotatedDocument& doc, const Taxonomy& taxonomy,
                               SimilarityWeights weights, WindowConfig cfg, std::size_t k,
                               const StopwordSet& stopwords = default_stopwords());

void write_dendrogram(const Dendrogram& d, std::ostream& out);
// DataError when the tree is structurally inconsistent.
Dendrogram read_dendrogram(std::istream& in);

}  // namespace ontoseg
