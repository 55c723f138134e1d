#include "doctest.h"
#include "shortcycle/error.hpp"
#include "shortcycle/oracles.hpp"
#include "shortcycle/peeling.hpp"
#include "test_support.hpp"

using namespace shortcycle;
using namespace shortcycle::testing;
using peeling::phi;
using peeling::psi;

namespace {

// a, b, c = 0, 1, 2 form a triangle; u = 3 points at a and b.
Digraph apex_example() {
  return make_digraph(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}});
}

}  // namespace

TEST_CASE("psi") {
  CHECK(psi(triangle()) == Rational(3));
  CHECK(psi(bidirected_triangle()) == Rational(BigInt(3), BigInt(2)));
  CHECK_THROWS_AS(psi(make_digraph(2, {{0, 1}})), SinkPresent);
}

TEST_CASE("phi") {
  CHECK(phi(triangle()) == Rational(BigInt(3), BigInt(2)));
  CHECK(phi(bidirected_triangle()) == Rational(1));
  CHECK(phi(Digraph(0, {})) == Rational(0));
  CHECK(phi(apex_example()) == Rational(BigInt(11), BigInt(6)));
  // any union of cycles has phi = |V| / 2
  Digraph k = make_digraph(5, {{0, 1}, {1, 0}, {2, 3}, {3, 4}, {4, 2}});
  CHECK(phi(k) == Rational(BigInt(5), BigInt(2)));
}

TEST_CASE("removable_vertices on the worked examples") {
  CHECK(peeling::removable_vertices(triangle()) == std::vector<Vertex>{0, 1, 2});
  // u -> v, v -> a, v -> b with u, v, a, b = 0, 1, 2, 3
  Digraph fork = make_digraph(4, {{0, 1}, {1, 2}, {1, 3}});
  auto b = peeling::removal_balance(fork, 1);
  CHECK(b.lhs == Rational(BigInt(1), BigInt(3)));
  CHECK(b.rhs == Rational(BigInt(1), BigInt(2)));
  CHECK(peeling::removable_vertices(fork) == std::vector<Vertex>{0, 2, 3});
}

TEST_CASE("removability agrees with recomputing phi after deletion (n <= 4)") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Digraph& d : all_digraphs(n)) {
      auto removable = peeling::removable_vertices(d);
      const Rational before = phi_by_definition(d);
      for (Vertex v = 0; v < n; ++v) {
        const bool expected = phi_by_definition(delete_vertex_naive(d, v)) <= before;
        const bool listed =
            std::find(removable.begin(), removable.end(), v) != removable.end();
        REQUIRE(listed == expected);
        // vertices with no in-arcs are always removable
        if (d.in_degree(v) == 0) REQUIRE(listed);
      }
    }
  }
}

TEST_CASE("summing both sides of the removability inequality gives phi") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Digraph& d : all_digraphs(n)) {
      if (!is_sinkless(d)) continue;
      Rational lhs, rhs;
      for (Vertex v = 0; v < n; ++v) {
        auto b = peeling::removal_balance(d, v);
        lhs += b.lhs;
        rhs += b.rhs;
      }
      REQUIRE(lhs == phi(d));
      REQUIRE(rhs == phi(d));
    }
  }
}

TEST_CASE("peel_step") {
  CHECK_FALSE(peeling::peel_step(triangle()).has_value());
  CHECK(peeling::peel_step(apex_example()) == Vertex{3});
  CHECK(peeling::peel_step(bidirected_triangle()) == Vertex{0});
  CHECK_THROWS_AS(peeling::peel_step(make_digraph(2, {{0, 1}})), SinkPresent);
  CHECK_THROWS_AS(peeling::peel_step(Digraph(0, {})), InvalidInput);
}

TEST_CASE("apex removal lowers phi from 11/6 to 3/2") {
  auto trace = peeling::peel(apex_example());
  CHECK(trace.phi_initial == Rational(BigInt(11), BigInt(6)));
  REQUIRE(trace.steps.size() == 1);
  CHECK(trace.steps[0].removed == 3);
  CHECK(trace.steps[0].phi_after == Rational(BigInt(3), BigInt(2)));
  CHECK(trace.terminal == triangle());
  CHECK(trace.terminal_vertices == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("peel") {
  auto t = peeling::peel(triangle());
  CHECK(t.steps.empty());
  CHECK(t.terminal == triangle());

  auto b = peeling::peel(bidirected_triangle());
  REQUIRE(b.steps.size() == 1);
  CHECK(b.steps[0].removed == 0);
  CHECK(b.terminal == digon());
  CHECK(b.terminal_vertices == std::vector<Vertex>{1, 2});
}

TEST_CASE("short_cycle_via_peeling") {
  auto t = peeling::short_cycle_via_peeling(triangle());
  CHECK(t.vertices == std::vector<Vertex>{0, 1, 2});
  CHECK(t.bound == Rational(3));
  CHECK(t.kind == BoundKind::two_phi);

  auto b = peeling::short_cycle_via_peeling(bidirected_triangle());
  CHECK(b.length() == 2);
  CHECK(b.bound == Rational(2));
  CHECK(validate_cycle(bidirected_triangle(), b));

  auto c5 = peeling::short_cycle_via_peeling(directed_cycle(5));
  CHECK(c5.vertices == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK(c5.bound == Rational(5));
}

TEST_CASE("certificates use original indices and the shortest component") {
  // vertex 0 feeds a 3-cycle {1,2,3} and a digon {4,5}
  Digraph d = make_digraph(6, {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 4}});
  auto c = peeling::short_cycle_via_peeling(d);
  CHECK(c.vertices == std::vector<Vertex>{4, 5});
  CHECK(validate_cycle(d, c));
}

TEST_CASE("a custom policy must pick an eligible vertex") {
  auto last = [](const Digraph&, std::span<const Vertex> e) { return e.back(); };
  auto b = peeling::peel(bidirected_triangle(), last);
  CHECK(b.steps[0].removed == 2);
  auto bad = [](const Digraph&, std::span<const Vertex>) { return Vertex{99}; };
  CHECK_THROWS_AS(peeling::peel(bidirected_triangle(), bad), InvalidInput);
}

TEST_CASE("peeling bounds hold on every sink-less digraph with n <= 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Digraph& d : all_digraphs(n)) {
      if (!is_sinkless(d)) continue;
      auto trace = peeling::peel(d);
      Rational prev = trace.phi_initial;
      for (const auto& s : trace.steps) {
        REQUIRE(s.phi_after <= prev);
        prev = s.phi_after;
      }
      REQUIRE(is_union_of_cycles(trace.terminal));
      auto cert = peeling::short_cycle_from_trace(trace);
      REQUIRE(validate_cycle(d, cert));
      auto g = girth_by_permutation(d);
      REQUIRE(g);
      REQUIRE(Rational(static_cast<std::int64_t>(*g)) <= Rational(2) * phi(d));
      REQUIRE(Rational(static_cast<std::int64_t>(*g)) < Rational(2) * psi(d));
    }
  }
}
