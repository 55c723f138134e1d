#include "doctest.h"
#include "shortcycle/error.hpp"
#include "shortcycle/io.hpp"
#include "test_support.hpp"

using namespace shortcycle;
using namespace shortcycle::testing;

TEST_CASE("parse_digraph round-trips through format_digraph") {
  Digraph d = parse_digraph("# a triangle\ndigraph 3 3\n0 1\n\n1 2\n2 0\n");
  CHECK(d == triangle());
  CHECK(parse_digraph(format_digraph(bidirected_triangle())) == bidirected_triangle());
  CHECK(parse_digraph("digraph 0 0\n").vertex_count() == 0);
}

TEST_CASE("parse_digraph errors carry a line number") {
  CHECK_THROWS_AS(parse_digraph(""), InvalidInput);
  CHECK_THROWS_AS(parse_digraph("graph 3 3\n"), InvalidInput);
  CHECK_THROWS_AS(parse_digraph("digraph 3 2\n0 1\n"), InvalidInput);
  CHECK_THROWS_AS(parse_digraph("digraph 3 1\n0 1 2\n"), InvalidInput);
  CHECK_THROWS_AS(parse_digraph("digraph 3 1\n0 -1\n"), InvalidInput);
  CHECK_THROWS_AS(parse_digraph("digraph 3 1\n1 1\n"), InvalidInput);
  try {
    parse_digraph("digraph 2 1\n0 x\n");
    FAIL("expected InvalidInput");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("parse_rainbow") {
  RainbowInstance inst = parse_rainbow("rainbow 4 4\n0-1\n0-2, 1-2\n0-3,1-3\n2-3\n");
  CHECK(inst.vertex_count() == 4);
  CHECK(inst.family_count() == 4);
  CHECK(inst.singleton_count() == 2);
  CHECK(inst.family_contains(1, Edge(2, 1)));
  CHECK(parse_rainbow(format_rainbow(inst)) == inst);
  CHECK_THROWS_AS(parse_rainbow("rainbow 3 1\n0-1-2\n"), InvalidInput);
  CHECK_THROWS_AS(parse_rainbow("rainbow 3 1\n0-0\n"), InvalidInput);
  CHECK_THROWS_AS(parse_rainbow("rainbow 3 1\n0-1,0-2,1-2\n"), InvalidInput);
}

TEST_CASE("certificate json round trips") {
  CycleCertificate c{{1, 2, 0}, Rational(BigInt(7), BigInt(2)), BoundKind::two_phi};
  auto j = to_json(c);
  CHECK(j["kind"] == "two-phi");
  CHECK(j["length"] == 3);
  CycleCertificate back = cycle_certificate_from_json(j);
  CHECK(back.vertices == c.vertices);
  CHECK(back.bound == c.bound);
  CHECK(back.kind == c.kind);

  RainbowCycleCertificate r{{{Edge(0, 1), 0}, {Edge(0, 1), 2}}, Rational(3)};
  auto rb = rainbow_certificate_from_json(to_json(r));
  CHECK(rb.length() == 2);
  CHECK(rb.steps[1].color == 2);
  CHECK(rb.bound == Rational(3));

  BigInt huge = BigInt(1) << 80;
  Rational big(huge, BigInt(3));
  CHECK(rational_from_json(to_json(big)) == big);
}
