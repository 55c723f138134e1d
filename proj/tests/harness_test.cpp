#include "doctest.h"
#include "shortcycle/error.hpp"
#include "shortcycle/harness.hpp"
#include "test_support.hpp"

using namespace shortcycle;
using namespace shortcycle::testing;
using namespace shortcycle::harness;

TEST_CASE("labeled digraph space") {
  CHECK(labeled_count(2) == 4);
  CHECK(labeled_count(3) == 64);
  std::size_t all = 0, sinkless = 0;
  enumerate_digraphs(2, LabeledFilter::none, [&](const Digraph&) { ++all; });
  enumerate_digraphs(2, LabeledFilter::sinkless, [&](const Digraph& d) {
    ++sinkless;
    CHECK(d == digon());
  });
  CHECK(all == 4);
  CHECK(sinkless == 1);

  // the indexed space is the same set as the brute-force one
  std::set<std::vector<Arc>> a, b;
  for (std::uint64_t i = 0; i < labeled_count(3); ++i) {
    auto arcs = labeled_digraph(3, i).arcs();
    a.insert({arcs.begin(), arcs.end()});
  }
  for (const Digraph& d : all_digraphs(3)) {
    auto arcs = d.arcs();
    b.insert({arcs.begin(), arcs.end()});
  }
  CHECK(a == b);
}

TEST_CASE("strong connectivity filter") {
  CHECK(is_strongly_connected(triangle()));
  CHECK_FALSE(is_strongly_connected(make_digraph(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}})));
  std::size_t strong = 0;
  enumerate_digraphs(3, LabeledFilter::strongly_connected, [&](const Digraph&) { ++strong; });
  CHECK(strong == 18);
}

TEST_CASE("outmap space sizes") {
  CHECK(OutmapSpace(3, 1, 1).size() == 8);
  CHECK(OutmapSpace(6, 1, 2).size() == 15ull * 15 * 15 * 15 * 15 * 15);
  CHECK(OutmapSpace(2, 1, 1).size() == 1);
  OutmapSpace s(4, 1, 2);
  std::set<std::vector<Arc>> seen;
  for (std::uint64_t i = 0; i < s.size(); ++i) {
    Digraph d = s.at(i);
    for (Vertex v = 0; v < 4; ++v) {
      REQUIRE(d.out_degree(v) >= 1);
      REQUIRE(d.out_degree(v) <= 2);
    }
    auto arcs = d.arcs();
    seen.insert({arcs.begin(), arcs.end()});
  }
  CHECK(seen.size() == s.size());
}

TEST_CASE("random_rainbow_instance") {
  auto all_single = random_rainbow_instance(4, 4, 1, RainbowMode::disjoint);
  CHECK(all_single.singleton_count() == 4);
  CHECK(all_single.family_count() == 4);

  auto pairs = random_rainbow_instance(5, 0, 3, RainbowMode::disjoint);
  CHECK(pairs.singleton_count() == 0);
  std::set<Edge> edges;
  for (const Family& f : pairs.families())
    for (const Edge& e : f) edges.insert(e);
  CHECK(edges.size() == 10);

  CHECK_THROWS_AS(random_rainbow_instance(3, 0, 1, RainbowMode::disjoint), Infeasible);

  auto u1 = random_rainbow_instance(6, 2, 99, RainbowMode::unconstrained);
  auto u2 = random_rainbow_instance(6, 2, 99, RainbowMode::unconstrained);
  CHECK(u1 == u2);
  CHECK(u1.singleton_count() == 2);
}

TEST_CASE("suite config caps") {
  SuiteConfig cfg;
  cfg.n_max = 6;
  CHECK_THROWS_AS(validate(cfg), CapExceeded);
  cfg.n_max = 3;
  cfg.n_min = 4;
  CHECK_THROWS_AS(validate(cfg), InvalidInput);
}

TEST_CASE("reports do not depend on the worker count") {
  auto strip = [](nlohmann::ordered_json j) {
    j.erase("config");
    return j.dump();
  };
  SuiteConfig cfg;
  cfg.n_max = 4;
  cfg.filter = LabeledFilter::sinkless;
  cfg.checks = {Check::two_phi, Check::two_psi_strict, Check::chc, Check::eq1_identity};
  auto one = run_suite(cfg);
  cfg.workers = 3;
  auto three = run_suite(cfg);
  CHECK(strip(to_json(one)) == strip(to_json(three)));
  CHECK(one.theorem_violations() == 0);
  CHECK(one.instances == 2429);

  SuiteConfig rb;
  rb.generator = Generator::random_rainbow;
  rb.n_min = 4;
  rb.n_max = 7;
  rb.rainbow_count = 50;
  rb.checks = {Check::rainbow_bound, Check::rd_claim, Check::rchc};
  auto r1 = run_suite(rb);
  rb.workers = 4;
  auto r4 = run_suite(rb);
  CHECK(strip(to_json(r1)) == strip(to_json(r4)));
  CHECK(r1.theorem_violations() == 0);
}

TEST_CASE("conjecture findings are not theorem violations") {
  Report r;
  // four singletons forming a triangle plus a pendant edge: rg = 3 > ceil(4/2)
  RainbowInstance inst(4, {{Edge(0, 1)}, {Edge(1, 2)}, {Edge(0, 2)}, {Edge(2, 3)}});
  std::vector<Check> checks{Check::rchc, Check::rainbow_bound};
  check_rainbow(inst, 0, checks, r);
  CHECK(r.tally(Check::rchc).failed == 1);
  CHECK(r.findings.size() == 1);
  CHECK(r.theorem_violations() == 0);
  CHECK(is_conjecture(Check::rchc));
  CHECK_FALSE(is_conjecture(Check::two_phi));
}

TEST_CASE("check names round trip") {
  for (Check c : kAllChecks) CHECK(check_from_string(to_string(c)) == c);
  CHECK_FALSE(check_from_string("nope"));
}

TEST_CASE("extremal ratio search") {
  // expected maximum from the permutation oracle and psi by definition
  Rational expected;
  for (const Digraph& d : all_digraphs(3)) {
    if (!is_sinkless(d)) continue;
    Rational psi_d;
    for (Vertex v = 0; v < 3; ++v)
      psi_d += Rational(BigInt(1), BigInt(static_cast<std::int64_t>(d.out_degree(v))));
    Rational ratio = Rational(static_cast<std::int64_t>(*girth_by_permutation(d))) / psi_d;
    if (ratio > expected) expected = ratio;
  }
  CHECK(expected == Rational(BigInt(4), BigInt(3)));
  auto r = extremal_ratio_search(3, 1000, 1);
  REQUIRE(r.max_girth_over_psi);
  CHECK(r.max_girth_over_psi->ratio == expected);
  CHECK(r.theorem_violations() == 0);

  auto empty = extremal_ratio_search(4, 0, 1);
  CHECK_FALSE(empty.max_girth_over_psi);
  CHECK(empty.evaluations == 0);

  auto sampled = extremal_ratio_search(7, 300, 5);
  CHECK(sampled.evaluations == 300);
  REQUIRE(sampled.max_girth_over_psi);
  CHECK(sampled.max_girth_over_psi->ratio < Rational(2));
}
