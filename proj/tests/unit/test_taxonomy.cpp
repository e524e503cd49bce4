#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <thread>

#include "ontoseg/taxonomy.hpp"
#include "oracles.hpp"

using namespace ontoseg;

namespace {

const std::string kData = ONTOSEG_TEST_DATA;

Taxonomy person() { return load_taxonomy(kData + "/person_taxonomy.json"); }

TaxonomyError::Kind parse_error(const std::string& json) {
  std::istringstream in(json);
  try {
    parse_taxonomy(in);
  } catch (const TaxonomyError& e) {
    return e.kind();
  }
  FAIL("taxonomy was accepted: " << json);
  return TaxonomyError::Kind::kMalformed;
}

}  // namespace

TEST_CASE("person fixture depths and lca") {
  const auto t = person();
  CHECK(t.size() == 6);
  CHECK(t.edge_count() == 5);
  CHECK(t.root() == "Thing");
  CHECK(t.depth("Thing") == 1);
  CHECK(t.depth("Person") == 3);
  CHECK(t.depth("MusicalArtist") == 5);
  CHECK(t.lca("Person", "Person") == "Person");
  CHECK(t.lca("OfficeHolder", "MusicalArtist") == "Person");
  CHECK(t.lca("OfficeHolder", "Thing") == "Thing");
}

TEST_CASE("person fixture con_sim") {
  const auto t = person();
  CHECK(t.con_sim("OfficeHolder", "MusicalArtist") == doctest::Approx(2.0 * 3 / (4 + 5)).epsilon(1e-12));
  CHECK(t.con_sim("Thing", "MusicalArtist") == doctest::Approx(2.0 / 6).epsilon(1e-12));
  for (const auto* c : {"Thing", "Agent", "Person", "OfficeHolder", "Artist", "MusicalArtist"})
    CHECK(t.con_sim(c, c) == 1.0);
}

TEST_CASE("chain similarity falls off with distance") {
  const auto t = person();
  const char* chain[] = {"Thing", "Agent", "Person", "Artist", "MusicalArtist"};
  for (int i = 0; i < 5; ++i) {
    double prev = 2.0;
    for (int j = i; j < 5; ++j) {
      const double s = t.con_sim(chain[i], chain[j]);
      CHECK(s <= prev);
      prev = s;
    }
  }
}

TEST_CASE("diamond uses shortest root path and id order on ties") {
  const auto t = load_taxonomy(kData + "/diamond_taxonomy.json");
  CHECK(t.depth("Both") == 3);
  CHECK(t.depth("Deep") == 4);
  CHECK(t.depth("Shortcut") == 2);
  CHECK(t.lca("Both", "Other") == "Left");
  CHECK(t.lca("Other", "Both") == "Left");
  CHECK(t.con_sim("Both", "Other") == doctest::Approx(2.0 * 2 / 6).epsilon(1e-12));
  // The deepest common ancestor is Deep (depth 4) while Shortcut itself sits
  // at depth 2; the ratio 8/6 is capped.
  CHECK(t.lca("Deep", "Shortcut") == "Deep");
  CHECK(t.con_sim("Deep", "Shortcut") == 1.0);
}

TEST_CASE("loader rejects bad hierarchies") {
  using K = TaxonomyError::Kind;
  CHECK(parse_error("not json") == K::kMalformed);
  CHECK(parse_error(R"({"root": "A"})") == K::kMalformed);
  CHECK(parse_error(R"({"root": "A", "nodes": [{"id": "A", "parents": [1]}]})") == K::kMalformed);
  CHECK(parse_error(R"({"root": "A", "nodes": [{"id": "A", "parents": []}, {"id": "A", "parents": []}]})") ==
        K::kDuplicateNode);
  CHECK(parse_error(R"({"root": "A", "nodes": [{"id": "A", "parents": []}, {"id": "B", "parents": ["Z"]}]})") ==
        K::kUndeclaredParent);
  CHECK(parse_error(R"({"root": "R", "nodes": [{"id": "A", "parents": []}]})") == K::kNoRoot);
  CHECK(parse_error(R"({"root": "A", "nodes": [{"id": "A", "parents": []}, {"id": "B", "parents": []}]})") ==
        K::kMultipleRoots);
  CHECK(parse_error(R"({"root": "A", "nodes": [{"id": "A", "parents": []}, {"id": "B", "parents": ["A", "C"]},
                        {"id": "C", "parents": ["B"]}]})") == K::kCycle);
}

TEST_CASE("unknown classes and missing files") {
  const auto t = person();
  CHECK_THROWS_AS(t.con_sim("Person", "Nope"), TaxonomyError);
  try {
    t.index_of("Nope");
  } catch (const TaxonomyError& e) {
    CHECK(e.kind() == TaxonomyError::Kind::kUnknownClass);
    CHECK(e.id() == "Nope");
  }
  CHECK_THROWS_AS(load_taxonomy(kData + "/does_not_exist.json"), ConfigError);
}

TEST_CASE("class handles follow id order") {
  const auto t = person();
  for (ClassIndex a = 0; a + 1 < t.size(); ++a) CHECK(t.name(a) < t.name(a + 1));
}

TEST_CASE("random DAGs agree with the path-enumerating oracle") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 30)(rng);
    const auto r = oracle::random_taxonomy(rng, n);
    const Taxonomy t(r.root, r.nodes);
    const oracle::NaiveTaxonomy naive(r.root, r.nodes);
    for (const auto& a : r.nodes) {
      REQUIRE(t.depth(a.id) == naive.depth(a.id));
      for (const auto& b : r.nodes) {
        REQUIRE(t.lca(a.id, b.id) == naive.lca(a.id, b.id));
        const double s = t.con_sim(a.id, b.id);
        REQUIRE(s == doctest::Approx(naive.con_sim(a.id, b.id)).epsilon(1e-12));
        REQUIRE(s == t.con_sim(b.id, a.id));
        REQUIRE(s > 0.0);
        REQUIRE(s <= 1.0);
      }
    }
  }
}

TEST_CASE("memo is shared by concurrent readers") {
  std::mt19937_64 rng(11);
  const auto r = oracle::random_taxonomy(rng, 40);
  const Taxonomy t(r.root, r.nodes);
  const oracle::NaiveTaxonomy naive(r.root, r.nodes);
  std::vector<std::thread> threads;
  std::atomic<int> wrong{0};
  for (int w = 0; w < 4; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t i = 0; i < r.nodes.size(); ++i)
        for (std::size_t j = 0; j < r.nodes.size(); ++j) {
          const auto& a = r.nodes[(i + w) % r.nodes.size()].id;
          const auto& b = r.nodes[j].id;
          if (std::abs(t.con_sim(a, b) - naive.con_sim(a, b)) > 1e-12) ++wrong;
        }
    });
  }
  for (auto& th : threads) th.join();
  CHECK(wrong == 0);
  CHECK(t.memo_size() == 40 * 39 / 2);
}
