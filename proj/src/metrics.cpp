#include "ontoseg/metrics.hpp"

#include <cmath>
#include <cstdio>

namespace ontoseg {
namespace {

void check_pair(const Segmentation& ref, const Segmentation& hyp, std::size_t k) {
  if (ref.sentence_count() != hyp.sentence_count()) {
    throw DataError("reference has " + std::to_string(ref.sentence_count()) + " sentences but hypothesis has " +
                    std::to_string(hyp.sentence_count()));
  }
  if (k < 1 || k >= ref.sentence_count()) {
    throw DataError("window width k=" + std::to_string(k) + " needs 1 <= k < " +
                    std::to_string(ref.sentence_count()));
  }
}

}  // namespace

double pk_score(const Segmentation& ref, const Segmentation& hyp, std::size_t k) {
  check_pair(ref, hyp, k);
  const auto r = ref.segment_ids();
  const auto h = hyp.segment_ids();
  const std::size_t probes = ref.sentence_count() - k;
  std::size_t misses = 0;
  for (std::size_t i = 0; i < probes; ++i) {
    if ((r[i] == r[i + k]) != (h[i] == h[i + k])) ++misses;
  }
  return static_cast<double>(misses) / static_cast<double>(probes);
}

double window_diff_score(const Segmentation& ref, const Segmentation& hyp, std::size_t k) {
  check_pair(ref, hyp, k);
  // Segment ids increase by one per boundary, so their difference counts
  // the boundaries inside a window.
  const auto r = ref.segment_ids();
  const auto h = hyp.segment_ids();
  const std::size_t windows = ref.sentence_count() - k;
  std::size_t misses = 0;
  for (std::size_t i = 0; i < windows; ++i) {
    if (r[i + k] - r[i] != h[i + k] - h[i]) ++misses;
  }
  return static_cast<double>(misses) / static_cast<double>(windows);
}

std::size_t choose_k(std::span<const Segmentation> refs) {
  if (refs.empty()) throw DataError("choose_k needs at least one reference");
  std::size_t sentences = 0;
  std::size_t segments = 0;
  for (const auto& r : refs) {
    sentences += r.sentence_count();
    segments += r.segment_count();
  }
  const double half_mean = static_cast<double>(sentences) / static_cast<double>(segments) / 2.0;
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(half_mean)));
}

std::size_t resolve_k(const Segmentation& ref, const EvalConfig& cfg) {
  if (cfg.policy == KPolicy::kFixed) return cfg.k;
  return choose_k(std::span<const Segmentation>(&ref, 1));
}

double pk_score(const Segmentation& ref, const Segmentation& hyp, const EvalConfig& cfg) {
  return pk_score(ref, hyp, resolve_k(ref, cfg));
}

double window_diff_score(const Segmentation& ref, const Segmentation& hyp, const EvalConfig& cfg) {
  return window_diff_score(ref, hyp, resolve_k(ref, cfg));
}

EvalReport evaluate(const std::vector<ScoredPair>& pairs, const EvalConfig& cfg) {
  if (pairs.empty()) throw DataError("nothing to evaluate");
  EvalReport report;
  bool shared_k = true;
  for (const auto& p : pairs) {
    DocumentScore s;
    s.doc_id = p.doc_id;
    s.k = resolve_k(p.ref, cfg);
    try {
      s.pk = pk_score(p.ref, p.hyp, s.k);
      s.window_diff = window_diff_score(p.ref, p.hyp, s.k);
    } catch (const DataError& e) {
      throw DataError("document '" + p.doc_id + "': " + e.what());
    }
    report.pk += s.pk;
    report.window_diff += s.window_diff;
    if (!report.per_document.empty() && report.per_document.front().k != s.k) shared_k = false;
    report.per_document.push_back(std::move(s));
  }
  const auto n = static_cast<double>(pairs.size());
  report.pk /= n;
  report.window_diff /= n;
  if (shared_k) report.k_used = report.per_document.front().k;
  return report;
}

void write_report(const EvalReport& report, std::ostream& out) {
  char buf[64];
  out << "doc_id\tpk\twd\tk\n";
  for (const auto& s : report.per_document) {
    std::snprintf(buf, sizeof buf, "\t%.6f\t%.6f\t", s.pk, s.window_diff);
    out << s.doc_id << buf << s.k << '\n';
  }
  std::snprintf(buf, sizeof buf, "\t%.6f\t%.6f\t", report.pk, report.window_diff);
  out << "mean" << buf << (report.k_used ? std::to_string(*report.k_used) : "-") << '\n';
}

}  // namespace ontoseg
