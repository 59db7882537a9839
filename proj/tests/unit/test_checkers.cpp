#include "doctest.h"

#include <random>

#include "matchext/formats.hpp"
#include "matchext/generators.hpp"
#include "matchext/checkers.hpp"
#include "matchext/structure.hpp"
#include "oracles.hpp"
#include "seed.hpp"

using namespace matchext;

namespace {

const LemmaCheck* find_check(const LemmaReport& r, const std::string& name) {
  for (const LemmaCheck& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Graph connected_random(std::mt19937_64& rng, int n, double p) {
  for (;;) {
    Graph g = oracle::random_graph(rng, n, p);
    if (oracle::components(g, g.vertices()) == 1) return g;
  }
}

}  // namespace

TEST_CASE("k-extendability by definition") {
  CHECK(is_k_extendable(cycle(6), 1).extendable);
  CHECK(is_k_extendable(witness_graph(WitnessGraph::G2), 2).extendable);

  const Graph chorded = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 3}});
  // {1-2, 4-5} leaves 0 and 3, joined by the chord.
  CHECK(has_perfect_matching(chorded, VertexSet{0, 3}));
  const ExtendabilityVerdict v = is_k_extendable(chorded, 2);
  CHECK_FALSE(v.extendable);
  REQUIRE(v.failing.has_value());
  CHECK(v.failing->to_string() == "0-1,3-4");
  CHECK(oracle::k_extendable(chorded, 2) == false);
}

TEST_CASE("k-extendability domain errors") {
  CHECK_THROWS_AS(is_k_extendable(cycle(5), 1), DomainError);
  CHECK_THROWS_AS(is_k_extendable(cycle(6), 3), DomainError);
  CHECK_THROWS_AS(is_k_extendable(cycle(6), -1), DomainError);
  CHECK_THROWS_AS(is_k_extendable(Graph::from_edges(4, {{0, 1}, {2, 3}}), 0), DomainError);
}

TEST_CASE("no matching of size k is reported") {
  const Graph star = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  const ExtendabilityVerdict v = is_k_extendable(star, 2);
  CHECK_FALSE(v.extendable);
  CHECK(v.no_k_matching);
  CHECK_FALSE(v.failing.has_value());
}

TEST_CASE("bipartite Hall surplus") {
  CHECK(bipartite_k_extendable(harary_bipartite(3, 10), 2).extendable);
  CHECK(bipartite_k_extendable(harary_bipartite(4, 16), 3).extendable);
  const HallVerdict c8 = bipartite_k_extendable(cycle(8), 2);
  CHECK_FALSE(c8.extendable);
  REQUIRE(c8.violating.has_value());
  CHECK(c8.violating->size() == 1);
  CHECK(*c8.violating == VertexSet{0});
  CHECK_THROWS_AS(bipartite_k_extendable(complete(4), 1), DomainError);
  const HallVerdict path = bipartite_k_extendable(Graph::from_edges(3, {{0, 1}, {1, 2}}), 0);
  CHECK(path.unbalanced);
  CHECK_FALSE(path.extendable);
}

TEST_CASE("factor criticality") {
  CHECK(is_n_factor_critical(cycle(7), 1).critical);
  CHECK(is_n_factor_critical(wheel(8), 2).critical);
  CHECK(is_n_factor_critical(harary(4, 9), 3).critical);
  const CriticalityVerdict c6 = is_n_factor_critical(cycle(6), 2);
  CHECK_FALSE(c6.critical);
  REQUIRE(c6.failing.has_value());
  CHECK(c6.failing->size() == 2);
  CHECK_THROWS_AS(is_n_factor_critical(cycle(6), 1), DomainError);
  CHECK_THROWS_AS(is_n_factor_critical(cycle(6), 6), DomainError);
}

TEST_CASE("Tutte-type criterion") {
  CHECK(n_factor_critical_tutte(complete(4), 2));
  CHECK_FALSE(n_factor_critical_tutte(cycle(6), 2));
  CHECK(n_factor_critical_tutte(harary(5, 10), 4));
  CHECK_FALSE(n_factor_critical_tutte(cycle(6), 1));
  CHECK_THROWS_AS(n_factor_critical_tutte(cycle(18), 2), DomainError);
}

TEST_CASE("definition and Tutte criterion agree on 500 random graphs") {
  std::mt19937_64 rng(testing_seed::value());
  for (int trial = 0; trial < 500; ++trial) {
    const int order = 2 + static_cast<int>(rng() % 9);
    const Graph g = oracle::random_graph(rng, order, 0.3 + 0.6 * (trial % 4) / 3.0);
    const int n = (order % 2) + 2 * static_cast<int>(rng() % ((order - order % 2) / 2));
    if (n > order - 2) continue;
    INFO(emit_graph6(g), " n=", n);
    const bool critical = is_n_factor_critical(g, n).critical;
    CHECK(critical == n_factor_critical_tutte(g, n));
    CHECK(critical == oracle::n_factor_critical(g, n));
  }
}

TEST_CASE("Hall surplus agrees with the definition on 200 bipartite graphs") {
  std::mt19937_64 rng(testing_seed::value() + 1);
  int compared = 0;
  while (compared < 200) {
    const int half = 1 + static_cast<int>(rng() % 6);
    const Graph g = oracle::random_bipartite(rng, half, half, 0.4 + 0.5 * (compared % 3) / 2.0);
    if (oracle::components(g, g.vertices()) != 1) continue;
    for (int k = 0; k <= std::min(3, half - 1); ++k) {
      INFO(emit_graph6(g), " k=", k);
      const bool by_hall = bipartite_k_extendable(g, k).extendable;
      CHECK(by_hall == is_k_extendable(g, k).extendable);
      CHECK(by_hall == oracle::k_extendable(g, k));
    }
    ++compared;
  }
}

TEST_CASE("extendability agrees with brute force and implies a perfect matching") {
  std::mt19937_64 rng(testing_seed::value() + 2);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 * (1 + static_cast<int>(rng() % 5));
    const Graph g = connected_random(rng, n, 0.5 + 0.4 * (trial % 3) / 2.0);
    for (int k = 0; k <= (n - 2) / 2; ++k) {
      const bool ext = is_k_extendable(g, k).extendable;
      CHECK(ext == oracle::k_extendable(g, k));
      if (ext && k >= 1) CHECK(is_k_extendable(g, 0).extendable);
    }
  }
}

TEST_CASE("odd harary graphs of degree three") {
  for (int s = 3; s <= 6; ++s) {
    const Graph h = harary(3, 2 * s);
    INFO("s=", s);
    if (s % 2 == 1) {
      CHECK(is_k_extendable(h, 2).extendable);
    } else {
      CHECK(is_n_factor_critical(h, 2).critical);
    }
  }
}

TEST_CASE("structural lemma validators") {
  const LemmaReport g2 = validate_structural_lemmas(witness_graph(WitnessGraph::G2), 2);
  CHECK(g2.all_passed());
  REQUIRE(find_check(g2, "independence-bound") != nullptr);
  CHECK(find_check(g2, "independence-bound")->applicable);

  const LemmaReport d2 = validate_structural_lemmas(double_complete_matching(2), 2);
  CHECK(d2.all_passed());
  REQUIRE(find_check(d2, "large-k-connectivity") != nullptr);
  CHECK(find_check(d2, "large-k-connectivity")->applicable);

  const LemmaReport c6 = validate_structural_lemmas(cycle(6), 1);
  CHECK(c6.all_passed());
  CHECK(find_check(c6, "connectivity")->passed);

  const LemmaReport weak = validate_structural_lemmas(cycle(8), 2);
  CHECK_FALSE(weak.all_passed());
  CHECK_FALSE(find_check(weak, "connectivity")->passed);
}

TEST_CASE("factor-critical bound validators") {
  CHECK(validate_factor_critical_bounds(wheel(8), 2).all_passed());
  CHECK(validate_factor_critical_bounds(harary(5, 10), 4).all_passed());
  CHECK_FALSE(validate_factor_critical_bounds(cycle(6), 2).all_passed());
}

TEST_CASE("lemma validators pass on random extendable graphs") {
  std::mt19937_64 rng(testing_seed::value() + 3);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 4 + 2 * static_cast<int>(rng() % 3);
    const Graph g = connected_random(rng, n, 0.7);
    for (int k = 1; k <= (n - 2) / 2; ++k) {
      if (!is_k_extendable(g, k).extendable) continue;
      ++checked;
      INFO(emit_graph6(g), " k=", k);
      CHECK(validate_structural_lemmas(g, k).all_passed());
    }
    for (int c = n % 2; c <= n - 2; c += 2) {
      if (is_n_factor_critical(g, c).critical) CHECK(validate_factor_critical_bounds(g, c).all_passed());
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("equivalence of extendability and factor criticality in the large-k range") {
  CHECK(check_equivalence_small(complete(6), 2));
  CHECK(is_k_extendable(complete(6), 2).extendable);
  CHECK(is_n_factor_critical(complete(6), 4).critical);
  // ν = 8 with k = 2 misses the 4k >= ν+2 precondition.
  CHECK_THROWS_AS(check_equivalence_small(double_complete_matching(2), 2), DomainError);

  std::mt19937_64 rng(testing_seed::value() + 4);
  int checked = 0;
  while (checked < 30) {
    const Graph g = connected_random(rng, 10, 0.8);
    if (oracle::bipartite(g)) continue;
    CHECK(check_equivalence_small(g, 3));
    CHECK(oracle::k_extendable(g, 3) == oracle::n_factor_critical(g, 6));
    ++checked;
  }
}
