#include "ontoseg/similarity.hpp"

#include <algorithm>
#include <stdexcept>

namespace ontoseg {

SimilarityWeights::SimilarityWeights(double alpha) : alpha_(alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("alpha must lie in [0, 1]");
}

double ent_sim(const Taxonomy& taxonomy, const Entity& a, const Entity& b) {
  if (a.classes.empty() || b.classes.empty()) {
    throw std::invalid_argument("ent_sim: entity without classes ('" +
                                (a.classes.empty() ? a.surface : b.surface) + "')");
  }
  std::vector<ClassIndex> xs;
  std::vector<ClassIndex> ys;
  for (const auto& c : a.classes) xs.push_back(taxonomy.index_of(c));
  for (const auto& c : b.classes) ys.push_back(taxonomy.index_of(c));
  // Fixed operand order keeps the floating-point sum exactly symmetric.
  if (ys < xs) xs.swap(ys);
  double sum = 0.0;
  for (ClassIndex x : xs) {
    for (ClassIndex y : ys) sum += taxonomy.con_sim(x, y);
  }
  return sum / static_cast<double>(xs.size() * ys.size());
}

ClassProfile ClassProfile::from_entities(const Taxonomy& taxonomy, std::span<const Entity> entities) {
  ClassProfile p;
  for (const auto& e : entities) {
    if (e.classes.empty()) continue;
    const double share = 1.0 / static_cast<double>(e.classes.size());
    for (const auto& c : e.classes) p.weights_.emplace_back(taxonomy.index_of(c), share);
    ++p.entity_count_;
  }
  std::sort(p.weights_.begin(), p.weights_.end());
  std::vector<std::pair<ClassIndex, double>> folded;
  for (const auto& [c, w] : p.weights_) {
    if (!folded.empty() && folded.back().first == c) {
      folded.back().second += w;
    } else {
      folded.emplace_back(c, w);
    }
  }
  p.weights_ = std::move(folded);
  return p;
}

void ClassProfile::merge(const ClassProfile& other) {
  std::vector<std::pair<ClassIndex, double>> out;
  out.reserve(weights_.size() + other.weights_.size());
  auto x = weights_.begin();
  auto y = other.weights_.begin();
  while (x != weights_.end() || y != other.weights_.end()) {
    if (y == other.weights_.end() || (x != weights_.end() && x->first < y->first)) {
      out.push_back(*x++);
    } else if (x == weights_.end() || y->first < x->first) {
      out.push_back(*y++);
    } else {
      out.emplace_back(x->first, x->second + y->second);
      ++x;
      ++y;
    }
  }
  weights_ = std::move(out);
  entity_count_ += other.entity_count_;
}

double profile_osim(const Taxonomy& taxonomy, const ClassProfile& a, const ClassProfile& b) {
  if (a.empty() || b.empty()) return 0.0;
  const bool swap = b.weights() < a.weights();
  const auto& outer = swap ? b.weights() : a.weights();
  const auto& inner = swap ? a.weights() : b.weights();
  double sum = 0.0;
  for (const auto& [x, wx] : outer) {
    double row = 0.0;
    for (const auto& [y, wy] : inner) row += wy * taxonomy.con_sim(x, y);
    sum += wx * row;
  }
  const double value = sum / (static_cast<double>(a.entity_count()) * static_cast<double>(b.entity_count()));
  return std::clamp(value, 0.0, 1.0);
}

double block_osim(const Taxonomy& taxonomy, const Block& a, const Block& b) {
  return profile_osim(taxonomy, ClassProfile::from_entities(taxonomy, a.entities),
                      ClassProfile::from_entities(taxonomy, b.entities));
}

double block_lsim(const Block& a, const Block& b) { return cosine(a.terms, b.terms); }

}  // namespace ontoseg
