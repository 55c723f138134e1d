#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "shortcycle/digraph.hpp"

namespace shortcycle {

// Index of an edge family; also the colour of the edges it holds.
using Color = std::uint32_t;

// Undirected edge, stored with u <= v. u == v is a loop.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool is_loop() const { return u == v; }
  bool touches(Vertex w) const { return u == w || v == w; }
  // Endpoint opposite to w; w must be an endpoint.
  Vertex other(Vertex w) const { return w == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using Family = std::vector<Edge>;

// Undirected multigraph on 0..n-1 together with an ordered list of edge
// families F_0..F_{m-1}, each of size 1 or 2.
//
// User-facing instances are simple-origin: no loops and no repeated edge
// inside one family. The same edge may appear in several families.
// Instances produced by contraction may carry loops and parallel edges;
// they are built with `Origin::contracted`.
class RainbowInstance {
 public:
  enum class Origin { simple, contracted };

  RainbowInstance() = default;
  // Throws InvalidInput on an empty or oversized family, an endpoint >= n,
  // or (simple origin only) a loop or a repeated edge within a family.
  RainbowInstance(std::size_t n, std::vector<Family> families,
                  Origin origin = Origin::simple);

  std::size_t vertex_count() const { return n_; }
  std::size_t family_count() const { return families_.size(); }
  const Family& family(Color c) const { return families_[c]; }
  std::span<const Family> families() const { return families_; }

  // Number of families of size 1.
  std::size_t singleton_count() const { return singletons_; }
  bool simple_origin() const { return origin_ == Origin::simple; }
  bool allows_loops() const { return origin_ == Origin::contracted; }

  bool family_contains(Color c, const Edge& e) const;

  friend bool operator==(const RainbowInstance&,
                         const RainbowInstance&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Family> families_;
  std::size_t singletons_ = 0;
  Origin origin_ = Origin::simple;
};

}  // namespace shortcycle
