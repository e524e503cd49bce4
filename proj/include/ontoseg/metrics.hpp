#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ontoseg/segmentation.hpp"

namespace ontoseg {

enum class KPolicy {
  kFixed,           // use EvalConfig::k as given
  kHalfMeanSegment, // half the mean reference segment length, per document
};

struct EvalConfig {
  KPolicy policy = KPolicy::kHalfMeanSegment;
  std::size_t k = 0;
};

// Pk: share of probes (i, i+k), i in [0, K-k), on which ref and hyp disagree
// about whether both ends lie in one segment. DataError on a sentence-count
// mismatch or unless 1 <= k < K.
double pk_score(const Segmentation& ref, const Segmentation& hyp, std::size_t k);
// WindowDiff: share of windows whose boundary counts differ.
double window_diff_score(const Segmentation& ref, const Segmentation& hyp, std::size_t k);

// round(mean reference segment length / 2), at least 1.
std::size_t choose_k(std::span<const Segmentation> refs);
std::size_t resolve_k(const Segmentation& ref, const EvalConfig& cfg);

double pk_score(const Segmentation& ref, const Segmentation& hyp, const EvalConfig& cfg);
double window_diff_score(const Segmentation& ref, const Segmentation& hyp, const EvalConfig& cfg);

struct DocumentScore {
  std::string doc_id;
  double pk = 0.0;
  double window_diff = 0.0;
  std::size_t k = 0;
};

struct EvalReport {
  double pk = 0.0;           // unweighted mean over documents
  double window_diff = 0.0;  // unweighted mean over documents
  std::optional<std::size_t> k_used;  // set when every document used the same k
  std::vector<DocumentScore> per_document;
};

struct ScoredPair {
  std::string doc_id;
  Segmentation ref;
  Segmentation hyp;
};

EvalReport evaluate(const std::vector<ScoredPair>& pairs, const EvalConfig& cfg);

// Tab-separated: header "doc_id pk wd k", one row per document, then a
// "mean" row ("-" in the k column when documents used different k).
void write_report(const EvalReport& report, std::ostream& out);

}  // namespace ontoseg
