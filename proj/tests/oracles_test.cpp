#include <random>

#include "doctest.h"
#include "shortcycle/error.hpp"
#include "shortcycle/oracles.hpp"
#include "test_support.hpp"

using namespace shortcycle;
using namespace shortcycle::testing;

TEST_CASE("girth_exact on small cases") {
  CHECK_FALSE(oracles::girth_exact(make_digraph(3, {{0, 1}, {1, 2}, {0, 2}})).girth);
  auto dg = oracles::girth_exact(digon());
  CHECK(dg.girth == 2u);
  CHECK(dg.witness->vertices == std::vector<Vertex>{0, 1});
  CHECK(oracles::girth_exact(bidirected_triangle()).girth == 2u);
  auto t = oracles::girth_exact(triangle());
  CHECK(t.girth == 3u);
  CHECK(t.witness->kind == BoundKind::exact_girth);
  CHECK(oracles::girth_exact(directed_cycle(7)).girth == 7u);
}

TEST_CASE("girth_exact matches the permutation oracle (n <= 4)") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Digraph& d : all_digraphs(n)) {
      auto g = oracles::girth_exact(d);
      REQUIRE(g.girth == girth_by_permutation(d));
      if (g.witness) {
        REQUIRE(validate_cycle(d, *g.witness));
        REQUIRE(g.witness->vertices == canonical_rotation(g.witness->vertices));
      }
    }
  }
}

TEST_CASE("enumerate_cycles matches the permutation oracle (n <= 4)") {
  CHECK(oracles::enumerate_cycles(bidirected_triangle(), 3).size() == 5);
  CHECK(oracles::enumerate_cycles(bidirected_triangle(), 2).size() == 3);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Digraph& d : all_digraphs(n)) {
      std::set<std::vector<Vertex>> got;
      for (const auto& c : oracles::enumerate_cycles(d, n)) {
        REQUIRE(got.insert(canonical_rotation(c)).second);
      }
      REQUIRE(got == cycles_by_permutation(d));
    }
  }
}

TEST_CASE("two_cycles_min_intersection") {
  Digraph two = make_digraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  auto a = oracles::two_cycles_min_intersection(two);
  CHECK(a.intersection.empty());
  CHECK_FALSE(a.same_cycle);
  CHECK(a.out_degree_one == 6);

  auto b = oracles::two_cycles_min_intersection(bidirected_triangle());
  CHECK(b.intersection.size() == 1);
  CHECK(b.in_hypothesis);
  CHECK(b.out_degree_one == 0);

  auto c = oracles::two_cycles_min_intersection(directed_cycle(4));
  CHECK(c.same_cycle);
  CHECK(c.intersection.size() == 4);

  CHECK_THROWS_AS(oracles::two_cycles_min_intersection(make_digraph(2, {{0, 1}})),
                  Acyclic);
}

TEST_CASE("deg2_short_cycle") {
  auto c5 = oracles::deg2_short_cycle(directed_cycle(5));
  CHECK(c5.bound == Rational(5));
  CHECK(c5.kind == BoundKind::ceil_n_plus_p_over_2);

  auto bt = oracles::deg2_short_cycle(bidirected_triangle());
  CHECK(bt.bound == Rational(2));
  CHECK(bt.length() == 2);

  // n = 3 and only vertex 0 has out-degree 2, so p = 2 and the bound is 3
  Digraph chord = make_digraph(3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}});
  auto ch = oracles::deg2_short_cycle(chord);
  CHECK(ch.vertices == std::vector<Vertex>{0, 2});
  CHECK(ch.bound == Rational(3));

  CHECK_THROWS_AS(oracles::deg2_short_cycle(make_digraph(2, {{0, 1}})), InvalidInput);
}

TEST_CASE("shortest_rainbow_cycle_exact on small cases") {
  CHECK_FALSE(oracles::shortest_rainbow_cycle_exact(RainbowInstance(3, {{Edge(0, 1)}})).length);

  RainbowInstance four(4, {{Edge(0, 1)},
                           {Edge(0, 2), Edge(1, 2)},
                           {Edge(0, 3), Edge(1, 3)},
                           {Edge(2, 3)}});
  auto r = oracles::shortest_rainbow_cycle_exact(four);
  CHECK(r.length == 3u);
  CHECK(validate_rainbow_cycle(four, *r.witness));

  RainbowInstance shared(3, {{Edge(0, 1)}, {Edge(0, 1), Edge(1, 2)}, {Edge(0, 2)}});
  CHECK(oracles::shortest_rainbow_cycle_exact(shared).length == 2u);

  RainbowInstance pairs(5, {{Edge(0, 1), Edge(2, 3)},
                            {Edge(1, 2), Edge(3, 4)},
                            {Edge(0, 2), Edge(1, 4)},
                            {Edge(0, 3), Edge(2, 4)},
                            {Edge(0, 4), Edge(1, 3)}});
  auto p = oracles::shortest_rainbow_cycle_exact(pairs);
  CHECK(p.length == 3u);
  CHECK(p.length == rainbow_girth_brute(pairs));
}

TEST_CASE("shortest_rainbow_cycle_exact matches brute force on random instances") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 400; ++i) {
    std::size_t n = 3 + rng() % 4;
    RainbowInstance inst = random_instance(rng, n);
    auto r = oracles::shortest_rainbow_cycle_exact(inst);
    REQUIRE(r.length == rainbow_girth_brute(inst));
    if (r.witness) REQUIRE(validate_rainbow_cycle(inst, *r.witness));
  }
}
