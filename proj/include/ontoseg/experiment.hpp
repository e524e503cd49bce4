#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ontoseg/annotation.hpp"
#include "ontoseg/dataset.hpp"
#include "ontoseg/metrics.hpp"
#include "ontoseg/taxonomy.hpp"
#include "ontoseg/textprep.hpp"

namespace ontoseg {

// A dataset slice: samples documents whose segments hold n in [n_min, n_max]
// sentences.
struct Subset {
  std::string name;
  std::size_t n_min = 3;
  std::size_t n_max = 11;
  std::size_t samples = 100;
};

// The four slices of the Choi benchmark: 3-11 (400), 3-5, 6-8, 9-11 (100 each).
std::vector<Subset> choi_subsets();
// "3-11:400" -> {"3-11", 3, 11, 400}. ConfigError on anything else.
Subset parse_subset(std::string_view text);

struct BenchConfig {
  std::vector<Subset> subsets = choi_subsets();
  std::vector<double> alphas{0.0, 0.3, 0.5, 0.7};
  std::vector<std::size_t> windows{1, 2, 3, 4};
  std::size_t num_segments = 10;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
};

struct BenchCell {
  std::string subset;
  double alpha = 0.0;
  std::size_t window = 1;
  double window_diff = 0.0;
  double pk = 0.0;
  std::size_t documents = 0;
  // Documents with fewer blocks than num_segments, cut into one segment per
  // block instead.
  std::size_t capped = 0;
};

struct BenchReport {
  std::vector<std::string> subsets;
  std::vector<double> alphas;
  std::vector<std::size_t> windows;
  // Ordered by alpha, then window, then subset.
  std::vector<BenchCell> cells;

  const BenchCell& at(std::size_t alpha, std::size_t window, std::size_t subset) const;
};

// Generates every subset from the corpus (subset i seeded from (seed, i)),
// annotates it with the gazetteer and scores every (alpha, window) cell with
// k = num_segments. Results do not depend on jobs.
BenchReport run_bench(const SourceCorpus& corpus, const Gazetteer& gazetteer, const Taxonomy& taxonomy,
                      const BenchConfig& config, const StopwordSet& stopwords = default_stopwords());

// One block per alpha with rows "W = 1".."W = n" and one column per subset,
// WindowDiff tables first, then Pk.
void write_bench_table(const BenchReport& report, std::ostream& out);
// subset alpha window wd pk documents capped, tab-separated.
void write_bench_tsv(const BenchReport& report, std::ostream& out);

// Scores every reference file against the hypothesis file with the same stem.
// DataError naming the document when a counterpart is missing.
EvalReport evaluate_directories(const std::filesystem::path& ref_dir, const std::filesystem::path& hyp_dir,
                                const EvalConfig& cfg);

}  // namespace ontoseg
