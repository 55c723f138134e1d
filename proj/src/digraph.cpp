#include "shortcycle/digraph.hpp"

#include <algorithm>
#include <string>

#include "shortcycle/error.hpp"

namespace shortcycle {

Digraph::Digraph(std::size_t n, std::span<const Arc> arcs)
    : out_(n), in_(n), arc_count_(arcs.size()) {
  for (const Arc& a : arcs) {
    if (a.from >= n || a.to >= n) {
      throw InvalidInput("arc " + std::to_string(a.from) + "->" +
                         std::to_string(a.to) + " has an endpoint >= " +
                         std::to_string(n));
    }
    if (a.from == a.to) {
      throw InvalidInput("loop present at vertex " + std::to_string(a.from));
    }
    out_[a.from].push_back(a.to);
    in_[a.to].push_back(a.from);
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(out_[v].begin(), out_[v].end());
    std::sort(in_[v].begin(), in_[v].end());
    auto dup = std::adjacent_find(out_[v].begin(), out_[v].end());
    if (dup != out_[v].end()) {
      throw InvalidInput("duplicate arc " + std::to_string(v) + "->" +
                         std::to_string(*dup));
    }
  }
}

std::size_t Digraph::min_out_degree() const {
  if (out_.empty()) return 0;
  std::size_t best = out_[0].size();
  for (const auto& o : out_) best = std::min(best, o.size());
  return best;
}

std::size_t Digraph::max_out_degree() const {
  std::size_t best = 0;
  for (const auto& o : out_) best = std::max(best, o.size());
  return best;
}

bool Digraph::has_arc(Vertex from, Vertex to) const {
  if (from >= out_.size()) return false;
  return std::binary_search(out_[from].begin(), out_[from].end(), to);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (Vertex u = 0; u < out_.size(); ++u) {
    for (Vertex v : out_[u]) result.push_back({u, v});
  }
  return result;
}

Digraph digraph_from_arcs(std::size_t n, std::span<const Arc> arcs) {
  return Digraph(n, arcs);
}

bool is_sinkless(const Digraph& d) {
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (d.out_degree(v) == 0) return false;
  }
  return true;
}

bool is_union_of_cycles(const Digraph& d) {
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (d.out_degree(v) != 1 || d.in_degree(v) != 1) return false;
  }
  return true;
}

VertexDeletion remove_vertex(const Digraph& d, Vertex v) {
  const std::size_t n = d.vertex_count();
  if (v >= n) throw InvalidInput("remove_vertex: vertex out of range");
  VertexDeletion result;
  result.old_to_new.assign(n, kNoVertex);
  for (Vertex u = 0; u < n; ++u) {
    if (u == v) continue;
    result.old_to_new[u] = static_cast<Vertex>(result.new_to_old.size());
    result.new_to_old.push_back(u);
  }
  std::vector<Arc> arcs;
  arcs.reserve(d.arc_count());
  for (Vertex u = 0; u < n; ++u) {
    if (u == v) continue;
    for (Vertex w : d.out_neighbors(u)) {
      if (w == v) continue;
      arcs.push_back({result.old_to_new[u], result.old_to_new[w]});
    }
  }
  result.graph = Digraph(n - 1, arcs);
  return result;
}

}  // namespace shortcycle
