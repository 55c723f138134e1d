#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace shortcycle {

using Vertex = std::uint32_t;

struct Arc {
  Vertex from;
  Vertex to;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Simple directed graph on vertices 0..n-1. No loops, no parallel arcs;
// antiparallel pairs (digons) are allowed. Immutable after construction.
class Digraph {
 public:
  Digraph() = default;

  // Throws InvalidInput on a loop, a duplicate arc or an endpoint >= n.
  Digraph(std::size_t n, std::span<const Arc> arcs);

  std::size_t vertex_count() const { return out_.size(); }
  std::size_t arc_count() const { return arc_count_; }
  bool empty() const { return out_.empty(); }

  // Sorted ascending.
  std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }

  std::size_t out_degree(Vertex v) const { return out_[v].size(); }
  std::size_t in_degree(Vertex v) const { return in_[v].size(); }

  // 0 for the empty graph.
  std::size_t min_out_degree() const;
  std::size_t max_out_degree() const;

  bool has_arc(Vertex from, Vertex to) const;

  // Arcs in lexicographic order.
  std::vector<Arc> arcs() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.out_ == b.out_;
  }

 private:
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t arc_count_ = 0;
};

Digraph digraph_from_arcs(std::size_t n, std::span<const Arc> arcs);

// True iff every vertex has out-degree >= 1. Vacuously true when empty.
bool is_sinkless(const Digraph& d);

// True iff every in- and out-degree equals 1 (disjoint directed cycles).
// Vacuously true when empty.
bool is_union_of_cycles(const Digraph& d);

// D - v. `old_to_new` is left with the remapped index of each surviving
// vertex and kNoVertex at v; `new_to_old` is the inverse.
inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

struct VertexDeletion {
  Digraph graph;
  std::vector<Vertex> old_to_new;
  std::vector<Vertex> new_to_old;
};

VertexDeletion remove_vertex(const Digraph& d, Vertex v);

}  // namespace shortcycle
