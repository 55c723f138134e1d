#include "shortcycle/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>

#include "shortcycle/error.hpp"

namespace shortcycle::oracles {

GirthResult girth_exact(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::size_t best = kUnseen;
  Vertex best_root = 0;
  Vertex best_last = 0;
  std::vector<Vertex> best_parent;

  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[root] = 0;
    queue.clear();
    queue.push_back(root);
    // A cycle through root has length dist[u] + 1 for an in-neighbour u.
    std::size_t found = kUnseen;
    Vertex found_last = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      if (dist[u] + 1 >= best || dist[u] + 1 >= found) break;
      for (Vertex w : d.out_neighbors(u)) {
        if (w == root) {
          found = dist[u] + 1;
          found_last = u;
          break;
        }
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        }
      }
    }
    if (found < best) {
      best = found;
      best_root = root;
      best_last = found_last;
      best_parent = parent;
    }
  }

  GirthResult result;
  if (best == kUnseen) return result;
  Cycle cycle;
  for (Vertex v = best_last; v != best_root; v = best_parent[v]) {
    cycle.push_back(v);
  }
  cycle.push_back(best_root);
  std::reverse(cycle.begin(), cycle.end());
  result.girth = best;
  result.witness = CycleCertificate{canonical_rotation(std::move(cycle)),
                                    Rational(static_cast<std::int64_t>(best)),
                                    BoundKind::exact_girth};
  return result;
}

namespace {

class CycleWalker {
 public:
  CycleWalker(const Digraph& d, std::size_t max_length,
              const std::function<void(std::span<const Vertex>)>& visit)
      : d_(d), max_length_(max_length), visit_(visit),
        on_path_(d.vertex_count(), false) {}

  void run() {
    for (Vertex s = 0; s < d_.vertex_count(); ++s) {
      root_ = s;
      path_.assign(1, s);
      on_path_[s] = true;
      extend(s);
      on_path_[s] = false;
    }
  }

 private:
  void extend(Vertex v) {
    for (Vertex w : d_.out_neighbors(v)) {
      if (w == root_) {
        if (path_.size() >= 2) emit();
        continue;
      }
      if (w < root_ || on_path_[w] || path_.size() >= max_length_) continue;
      path_.push_back(w);
      on_path_[w] = true;
      extend(w);
      on_path_[w] = false;
      path_.pop_back();
    }
  }

  void emit() {
    if (++emitted_ > kMaxEnumeratedCycles) {
      throw ResourceCap("cycle enumeration exceeded " +
                        std::to_string(kMaxEnumeratedCycles) + " cycles");
    }
    visit_(path_);
  }

  const Digraph& d_;
  std::size_t max_length_;
  const std::function<void(std::span<const Vertex>)>& visit_;
  std::vector<bool> on_path_;
  std::vector<Vertex> path_;
  Vertex root_ = 0;
  std::size_t emitted_ = 0;
};

}  // namespace

void for_each_cycle(const Digraph& d, std::size_t max_length,
                    const std::function<void(std::span<const Vertex>)>& visit) {
  if (max_length < 2) return;
  CycleWalker(d, max_length, visit).run();
}

std::vector<Cycle> enumerate_cycles(const Digraph& d, std::size_t max_length) {
  std::vector<Cycle> cycles;
  for_each_cycle(d, max_length, [&](std::span<const Vertex> c) {
    cycles.emplace_back(c.begin(), c.end());
  });
  return cycles;
}

TwoCyclePair two_cycles_min_intersection(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  if (n > kMaxPairSearchVertices) {
    throw ResourceCap("two-cycle search supports at most " +
                      std::to_string(kMaxPairSearchVertices) + " vertices");
  }
  std::vector<Cycle> cycles;
  std::vector<std::uint64_t> masks;
  for_each_cycle(d, n, [&](std::span<const Vertex> c) {
    std::uint64_t m = 0;
    for (Vertex v : c) m |= std::uint64_t{1} << v;
    cycles.emplace_back(c.begin(), c.end());
    masks.push_back(m);
  });
  if (cycles.empty()) throw Acyclic("digraph has no directed cycle");

  std::size_t best_i = 0, best_j = 0;
  int best_meet = std::numeric_limits<int>::max();
  std::size_t best_size = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i; j < cycles.size(); ++j) {
      int meet = std::popcount(masks[i] & masks[j]);
      std::size_t size = cycles[i].size() + cycles[j].size();
      if (meet < best_meet || (meet == best_meet && size < best_size)) {
        best_meet = meet;
        best_size = size;
        best_i = i;
        best_j = j;
      }
    }
  }

  TwoCyclePair pair;
  pair.first = cycles[best_i];
  pair.second = cycles[best_j];
  pair.same_cycle = best_i == best_j;
  for (Vertex v = 0; v < n; ++v) {
    if (masks[best_i] & masks[best_j] & (std::uint64_t{1} << v)) {
      pair.intersection.push_back(v);
    }
    if (d.out_degree(v) == 1) ++pair.out_degree_one;
  }
  pair.in_hypothesis = d.min_out_degree() >= 1 && d.max_out_degree() <= 2;
  if (pair.in_hypothesis &&
      pair.intersection.size() > pair.out_degree_one + 1) {
    throw TheoremViolation(
        "two-cycle intersection " + std::to_string(pair.intersection.size()) +
        " exceeds p + 1 = " + std::to_string(pair.out_degree_one + 1));
  }
  return pair;
}

CycleCertificate deg2_short_cycle(const Digraph& d) {
  if (d.empty() || d.min_out_degree() < 1 || d.max_out_degree() > 2) {
    throw InvalidInput("deg2_short_cycle needs every out-degree in {1, 2}");
  }
  TwoCyclePair pair = two_cycles_min_intersection(d);
  const auto n = static_cast<std::int64_t>(d.vertex_count());
  const auto p = static_cast<std::int64_t>(pair.out_degree_one);
  CycleCertificate c;
  c.vertices = pair.second.size() < pair.first.size() ? pair.second
                                                      : pair.first;
  c.bound = Rational(ceil_div(n + p, 2));
  c.kind = BoundKind::ceil_n_plus_p_over_2;
  if (!validate_cycle(d, c)) {
    throw TheoremViolation("short cycle of length " +
                           std::to_string(c.length()) +
                           " exceeds ceil((n+p)/2) = " + c.bound.to_string());
  }
  return c;
}

namespace {

struct ColoredArc {
  Vertex to;
  Color color;
  Edge edge;
};

class RainbowSearch {
 public:
  explicit RainbowSearch(const RainbowInstance& inst)
      : n_(inst.vertex_count()), adj_(inst.vertex_count()) {
    for (Color c = 0; c < inst.family_count(); ++c) {
      for (const Edge& e : inst.family(c)) {
        if (e.is_loop()) continue;
        adj_[e.u].push_back({e.v, c, e});
        adj_[e.v].push_back({e.u, c, e});
      }
    }
  }

  // First rainbow cycle of exactly `length` edges rooted at its smallest
  // vertex, or false.
  bool find(std::size_t length, std::vector<RainbowStep>& out) {
    length_ = length;
    for (Vertex s = 0; s < n_; ++s) {
      root_ = s;
      steps_.clear();
      if (extend(s, std::uint64_t{1} << s, 0)) {
        out = steps_;
        return true;
      }
    }
    return false;
  }

 private:
  bool extend(Vertex v, std::uint64_t visited, std::uint64_t colors) {
    const std::size_t depth = steps_.size();
    for (const ColoredArc& a : adj_[v]) {
      if (colors & (std::uint64_t{1} << a.color)) continue;
      if (a.to == root_) {
        if (depth + 1 == length_) {
          steps_.push_back({a.edge, a.color});
          return true;
        }
        continue;
      }
      if (a.to < root_ || (visited & (std::uint64_t{1} << a.to))) continue;
      if (depth + 1 >= length_) continue;
      steps_.push_back({a.edge, a.color});
      if (extend(a.to, visited | (std::uint64_t{1} << a.to),
                 colors | (std::uint64_t{1} << a.color))) {
        return true;
      }
      steps_.pop_back();
    }
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<ColoredArc>> adj_;
  std::vector<RainbowStep> steps_;
  std::size_t length_ = 0;
  Vertex root_ = 0;
};

}  // namespace

RainbowGirthResult shortest_rainbow_cycle_exact(const RainbowInstance& inst) {
  if (inst.vertex_count() > kMaxRainbowVertices) {
    throw ResourceCap("exact rainbow search supports at most " +
                      std::to_string(kMaxRainbowVertices) + " vertices");
  }
  if (inst.family_count() > kMaxRainbowFamilies) {
    throw ResourceCap("exact rainbow search supports at most " +
                      std::to_string(kMaxRainbowFamilies) + " families");
  }
  RainbowGirthResult result;
  auto found = [&](std::vector<RainbowStep> steps) {
    result.length = steps.size();
    result.witness = RainbowCycleCertificate{std::move(steps), std::nullopt};
    return result;
  };

  for (Color c = 0; c < inst.family_count(); ++c) {
    for (const Edge& e : inst.family(c)) {
      if (e.is_loop()) return found({{e, c}});
    }
  }
  for (Color c = 0; c < inst.family_count(); ++c) {
    for (const Edge& e : inst.family(c)) {
      for (Color c2 = c + 1; c2 < inst.family_count(); ++c2) {
        if (inst.family_contains(c2, e)) return found({{e, c}, {e, c2}});
      }
    }
  }
  RainbowSearch search(inst);
  std::vector<RainbowStep> steps;
  const std::size_t longest = std::min(inst.vertex_count(),
                                       inst.family_count());
  for (std::size_t len = 3; len <= longest; ++len) {
    if (search.find(len, steps)) return found(std::move(steps));
  }
  return result;
}

}  // namespace shortcycle::oracles
