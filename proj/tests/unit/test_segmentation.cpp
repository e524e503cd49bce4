#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <map>
#include <sstream>

#include "ontoseg/segmentation.hpp"
#include "oracles.hpp"

using namespace ontoseg;

namespace {

const std::string kData = ONTOSEG_TEST_DATA;

// Scores a pair of nodes by the sentence spans they cover.
class ScriptedModel : public MergeModel {
 public:
  using Score = std::function<double(SentenceSpan, SentenceSpan)>;
  ScriptedModel(std::vector<SentenceSpan> leaves, Score score) : spans_(std::move(leaves)), score_(std::move(score)) {}
  double similarity(std::size_t l, std::size_t r) override {
    ++calls;
    return score_(spans_.at(l), spans_.at(r));
  }
  void merge(std::size_t l, std::size_t r, std::size_t merged) override {
    if (spans_.size() <= merged) spans_.resize(merged + 1);
    spans_[merged] = {spans_.at(l).begin, spans_.at(r).end};
  }
  std::size_t calls = 0;

 private:
  std::vector<SentenceSpan> spans_;
  Score score_;
};

std::vector<SentenceSpan> unit_leaves(std::size_t n) {
  std::vector<SentenceSpan> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back({i, i + 1});
  return out;
}

std::string describe(const Dendrogram& d, std::size_t id) {
  const auto& n = d.nodes[id];
  if (n.is_leaf()) return "B" + std::to_string(id + 1);
  return "(" + describe(d, (*n.children)[0]) + "," + describe(d, (*n.children)[1]) + ")";
}

}  // namespace

TEST_CASE("segmentation type") {
  const Segmentation s(10, {3, 7});
  CHECK(s.segment_count() == 3);
  CHECK(s.segment_lengths() == std::vector<std::size_t>{3, 4, 3});
  CHECK(s.segment_ids() == std::vector<std::size_t>{0, 0, 0, 1, 1, 1, 1, 2, 2, 2});
  CHECK(Segmentation::from_lengths({3, 4, 3}) == s);
  CHECK(Segmentation(1, {}).segment_count() == 1);
  CHECK_THROWS_AS(Segmentation(0, {}), DataError);
  CHECK_THROWS_AS(Segmentation(5, {0}), DataError);
  CHECK_THROWS_AS(Segmentation(5, {5}), DataError);
  CHECK_THROWS_AS(Segmentation(5, {3, 2}), DataError);
  CHECK_THROWS_AS(Segmentation(5, {2, 2}), DataError);
  CHECK_THROWS_AS(Segmentation::from_lengths({}), DataError);
  CHECK_THROWS_AS(Segmentation::from_lengths({2, 0}), DataError);
}

TEST_CASE("blocks cover the document in windows") {
  auto doc = unannotated("d", {"One tiger.", "Two tigers.", "A comet.", "Comets!", "Lone."});
  doc.sentences[1].entities.push_back(make_entity("x", {"A"}));
  const auto blocks = make_blocks(doc, {2});
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0].span == SentenceSpan{0, 2});
  CHECK(blocks[2].span == SentenceSpan{4, 5});
  CHECK(blocks[0].entities.size() == 1);
  CHECK(blocks[0].terms.count("tiger") == 2);
  CHECK(blocks[1].terms.count("comet") == 2);
  CHECK(make_blocks(doc, {5}).size() == 1);
  CHECK_THROWS_AS(make_blocks(doc, {0}), ConfigError);
  CHECK_THROWS_AS(make_blocks(doc, {6}), ConfigError);
}

TEST_CASE("greedy merge picks the best adjacent pair") {
  ScriptedModel m(unit_leaves(3), [](SentenceSpan l, SentenceSpan r) {
    if (l.begin == 0 && r.end == 2) return 0.9;
    if (l.begin == 1 && r.end == 3) return 0.2;
    return 0.5;
  });
  const auto d = agglomerate(unit_leaves(3), m);
  CHECK(describe(d, d.root()) == "((B1,B2),B3)");
  CHECK(d.nodes[3].similarity == 0.9);
  CHECK(d.nodes[3].step == 0);
  CHECK(d.nodes[4].step == 1);
}

TEST_CASE("ties go left") {
  ScriptedModel m(unit_leaves(5), [](SentenceSpan, SentenceSpan) { return 0.5; });
  const auto d = agglomerate(unit_leaves(5), m);
  CHECK(describe(d, d.root()) == "((((B1,B2),B3),B4),B5)");
}

TEST_CASE("flatten a left-leaning tree") {
  ScriptedModel m(unit_leaves(10), [](SentenceSpan, SentenceSpan) { return 0.0; });
  const auto d = agglomerate(unit_leaves(10), m);
  CHECK(flatten(d, 1).boundaries().empty());
  // Root splits into (B1..B9 | B10); the larger part then into (B1..B8 | B9).
  CHECK(flatten(d, 3).boundaries() == std::vector<std::size_t>{8, 9});
  std::vector<std::size_t> all{1, 2, 3, 4, 5, 6, 7, 8, 9};
  CHECK(flatten(d, 10).boundaries() == all);
  CHECK_THROWS_AS(flatten(d, 0), ConfigError);
  CHECK_THROWS_AS(flatten(d, 11), ConfigError);
}

TEST_CASE("flatten breaks size ties to the left") {
  // ((B1,B2),(B3,B4)): after the root, both halves cover two blocks.
  ScriptedModel m(unit_leaves(4), [](SentenceSpan l, SentenceSpan r) {
    if (l.size() == 1 && r.size() == 1 && l.begin != 1) return 1.0;
    return 0.1;
  });
  const auto d = agglomerate(unit_leaves(4), m);
  REQUIRE(describe(d, d.root()) == "((B1,B2),(B3,B4))");
  CHECK(flatten(d, 3).boundaries() == std::vector<std::size_t>{1, 2});
}

TEST_CASE("agglomerate rejects bad input") {
  ScriptedModel nan_model(unit_leaves(2), [](SentenceSpan, SentenceSpan) { return std::nan(""); });
  CHECK_THROWS_AS(agglomerate(unit_leaves(2), nan_model), DataError);
  ScriptedModel m(unit_leaves(2), [](SentenceSpan, SentenceSpan) { return 0.0; });
  CHECK_THROWS_AS(agglomerate({}, m), DataError);
  CHECK_THROWS_AS(agglomerate({{0, 1}, {2, 3}}, m), DataError);
  const auto single = agglomerate({{0, 4}}, m);
  CHECK(single.nodes.size() == 1);
  CHECK(flatten(single, 1) == Segmentation(4, {}));
}

TEST_CASE("segment the classic example") {
  const auto t = load_taxonomy(kData + "/person_taxonomy.json");
  AnnotatedDocument doc;
  doc.doc_id = "d";
  const auto politician = make_entity("Barack Obama", {"Person", "Agent", "OfficeHolder"});
  const auto singer = make_entity("Michael Jackson", {"Person", "Agent", "Artist", "MusicalArtist"});
  for (int i = 0; i < 3; ++i) doc.sentences.push_back({"Barack Obama spoke.", {politician}});
  for (int i = 0; i < 3; ++i) doc.sentences.push_back({"Michael Jackson sang.", {singer}});
  const auto r = segment_document(doc, t, SimilarityWeights(0.0), {1}, 2);
  CHECK(r.segmentation == Segmentation(6, {3}));
  CHECK(r.dendrogram.leaf_count == 6);
}

TEST_CASE("dendrogram json round trip and validation") {
  std::mt19937_64 rng(5);
  const auto r = oracle::random_taxonomy(rng, 12);
  const Taxonomy t(r.root, r.nodes);
  const auto doc = oracle::random_document(rng, r, 17);
  const auto d = build_dendrogram(make_blocks(doc, {2}), t, SimilarityWeights(0.5));
  std::ostringstream out;
  write_dendrogram(d, out);
  std::istringstream in(out.str());
  const auto back = read_dendrogram(in);
  std::ostringstream again;
  write_dendrogram(back, again);
  CHECK(out.str() == again.str());
  for (std::size_t k = 1; k <= d.leaf_count; ++k) CHECK(flatten(back, k) == flatten(d, k));

  auto broken = out.str();
  broken.replace(broken.find("\"step\": 0"), 9, "\"step\": 3");
  std::istringstream bad(broken);
  CHECK_THROWS_AS(read_dendrogram(bad), DataError);
  std::istringstream junk("[1, 2");
  CHECK_THROWS_AS(read_dendrogram(junk), DataError);
}

TEST_CASE("structural invariants on random documents") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 150; ++round) {
    const auto r = oracle::random_taxonomy(rng, std::uniform_int_distribution<std::size_t>(1, 20)(rng));
    const Taxonomy t(r.root, r.nodes);
    const auto n = std::uniform_int_distribution<std::size_t>(1, 40)(rng);
    const auto doc = oracle::random_document(rng, r, n);
    const auto w = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(4, n))(rng);
    const SimilarityWeights alpha(std::uniform_int_distribution<int>(0, 10)(rng) / 10.0);
    const auto blocks = make_blocks(doc, {w});
    const auto d = build_dendrogram(blocks, t, alpha);
    const auto leaves = blocks.size();

    REQUIRE(d.leaf_count == leaves);
    REQUIRE(d.merges().size() == leaves - 1);
    REQUIRE(d.similarity_evaluations < 3 * leaves);
    for (const auto& node : d.nodes) {
      if (node.is_leaf()) continue;
      const auto& l = d.nodes[(*node.children)[0]];
      const auto& rr = d.nodes[(*node.children)[1]];
      REQUIRE(l.sentences.end == rr.sentences.begin);
      REQUIRE(node.sentences == SentenceSpan{l.sentences.begin, rr.sentences.end});
      REQUIRE(node.similarity >= 0.0);
      REQUIRE(node.similarity <= 1.0 + 1e-12);
    }
    REQUIRE(d.nodes[d.root()].sentences == SentenceSpan{0, n});

    std::vector<std::size_t> prev;
    for (std::size_t k = 1; k <= leaves; ++k) {
      const auto s = flatten(d, k);
      REQUIRE(s.segment_count() == k);
      REQUIRE(s.sentence_count() == n);
      REQUIRE(std::includes(s.boundaries().begin(), s.boundaries().end(), prev.begin(), prev.end()));
      for (auto b : s.boundaries()) REQUIRE(b % w == 0);
      prev = s.boundaries();
    }

    const auto again = build_dendrogram(make_blocks(doc, {w}), t, alpha);
    std::ostringstream a, b;
    write_dendrogram(d, a);
    write_dendrogram(again, b);
    REQUIRE(a.str() == b.str());
  }
}
