#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ontoseg/annotation.hpp"
#include "ontoseg/taxonomy.hpp"
#include "ontoseg/textprep.hpp"

namespace ontoseg {

// Half-open range [begin, end) of sentence indices.
struct SentenceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  friend bool operator==(const SentenceSpan&, const SentenceSpan&) = default;
};

// A run of consecutive sentences with their pooled entities and terms.
struct Block {
  SentenceSpan span;
  std::vector<Entity> entities;  // in sentence order
  TermVector terms;
};

// Weight of the lexical score in the hybrid similarity; the ontological
// score gets 1 - alpha.
class SimilarityWeights {
 public:
  // ConfigError unless 0 <= alpha <= 1.
  explicit SimilarityWeights(double alpha = 0.0);
  double alpha() const { return alpha_; }

 private:
  double alpha_;
};

// Mean pairwise con_sim over the two class sets. Both entities must carry at
// least one class (std::invalid_argument otherwise); unknown classes throw
// TaxonomyError.
double ent_sim(const Taxonomy& taxonomy, const Entity& a, const Entity& b);

// The class-bearing entities of a block reduced to per-class weights: an
// entity with m classes adds 1/m to each of them. Mean pairwise ent_sim over
// two blocks is then a weighted sum over distinct class pairs, and merging
// two blocks is adding their profiles.
class ClassProfile {
 public:
  ClassProfile() = default;
  static ClassProfile from_entities(const Taxonomy& taxonomy, std::span<const Entity> entities);

  void merge(const ClassProfile& other);

  std::size_t entity_count() const { return entity_count_; }
  bool empty() const { return entity_count_ == 0; }
  // Sorted by class index.
  const std::vector<std::pair<ClassIndex, double>>& weights() const { return weights_; }

 private:
  std::vector<std::pair<ClassIndex, double>> weights_;
  std::size_t entity_count_ = 0;
};

// Mean pairwise ent_sim over class-bearing entities; 0 if either side has none.
double profile_osim(const Taxonomy& taxonomy, const ClassProfile& a, const ClassProfile& b);
double block_osim(const Taxonomy& taxonomy, const Block& a, const Block& b);

double block_lsim(const Block& a, const Block& b);

inline double hybrid_sim(double osim, double lsim, SimilarityWeights weights) {
  return weights.alpha() * lsim + (1.0 - weights.alpha()) * osim;
}

}  // namespace ontoseg
