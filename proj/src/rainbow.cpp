#include "shortcycle/rainbow.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_set>

#include "shortcycle/error.hpp"
#include "shortcycle/oracles.hpp"

namespace shortcycle::rainbow {

bool HStructure::contains(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::vector<RainbowStep> HStructure::edges() const {
  std::vector<RainbowStep> out;
  out.reserve(1 + 2 * attachments.size());
  out.push_back({seed, seed_color});
  for (const Attachment& at : attachments) {
    out.push_back({Edge(at.x, at.a), at.color});
    out.push_back({Edge(at.x, at.b), at.color});
  }
  return out;
}

std::optional<RainbowCycleCertificate> shared_edge_cycle(
    const RainbowInstance& inst) {
  for (Color c = 0; c < inst.family_count(); ++c) {
    for (const Edge& e : inst.family(c)) {
      if (e.is_loop()) continue;
      for (Color c2 = c + 1; c2 < inst.family_count(); ++c2) {
        if (inst.family_contains(c2, e)) {
          return RainbowCycleCertificate{{{e, c}, {e, c2}}, std::nullopt};
        }
      }
    }
  }
  return std::nullopt;
}

HStructure build_greedy_subgraph(const RainbowInstance& inst,
                                 Color seed_color) {
  if (seed_color >= inst.family_count() ||
      inst.family(seed_color).size() != 1) {
    throw SeedNotSingleton("seed family " + std::to_string(seed_color) +
                           " is not a singleton");
  }
  HStructure h;
  h.seed_color = seed_color;
  h.seed = inst.family(seed_color).front();
  if (h.seed.is_loop()) throw InvalidInput("seed edge is a loop");
  h.vertices = {h.seed.u, h.seed.v};

  std::vector<bool> in_h(inst.vertex_count(), false);
  in_h[h.seed.u] = in_h[h.seed.v] = true;
  std::vector<bool> used(inst.family_count(), false);
  used[seed_color] = true;

  auto try_attach = [&](Color c) -> std::optional<Attachment> {
    const Family& f = inst.family(c);
    if (f.size() != 2) return std::nullopt;
    const Edge& e1 = f[0];
    const Edge& e2 = f[1];
    if (e1.is_loop() || e2.is_loop()) return std::nullopt;
    for (Vertex x : {e1.u, e1.v}) {
      if (in_h[x] || !e2.touches(x)) continue;
      Vertex a = e1.other(x);
      Vertex b = e2.other(x);
      if (a != b && in_h[a] && in_h[b]) return Attachment{x, a, b, c};
    }
    return std::nullopt;
  };

  bool grew = true;
  while (grew) {
    grew = false;
    for (Color c = 0; c < inst.family_count(); ++c) {
      if (used[c]) continue;
      if (auto at = try_attach(c)) {
        used[c] = true;
        in_h[at->x] = true;
        h.vertices.push_back(at->x);
        h.attachments.push_back(*at);
        grew = true;
        break;
      }
    }
  }
  return h;
}

namespace {

// Local view of H: dense vertex ids and an edge list with colours.
struct HGraph {
  std::vector<Vertex> vertex;            // local -> global
  std::vector<RainbowStep> edge;         // edge id -> (edge, colour)
  std::vector<std::vector<std::size_t>> incident;  // local -> edge ids

  explicit HGraph(const HStructure& h) : vertex(h.vertices), edge(h.edges()) {
    incident.resize(vertex.size());
    for (std::size_t id = 0; id < edge.size(); ++id) {
      incident[local(edge[id].edge.u)].push_back(id);
      incident[local(edge[id].edge.v)].push_back(id);
    }
  }

  std::size_t local(Vertex g) const {
    auto it = std::find(vertex.begin(), vertex.end(), g);
    if (it == vertex.end()) {
      throw InvalidInput("vertex " + std::to_string(g) + " is not in H");
    }
    return static_cast<std::size_t>(it - vertex.begin());
  }
};

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Shortest walk from u to v that never uses two same-coloured edges in a
// row (which also forbids immediate reversal). Returns edge ids.
std::vector<std::size_t> forbidden_turn_walk(const HGraph& g, std::size_t u,
                                             std::size_t v) {
  const std::size_t edges = g.edge.size();
  // State: (vertex, edge used to arrive or `edges` for the start).
  auto state = [&](std::size_t vert, std::size_t in) {
    return vert * (edges + 1) + in;
  };
  const std::size_t states = g.vertex.size() * (edges + 1);
  std::vector<std::size_t> prev(states, kNone);
  std::vector<bool> seen(states, false);
  std::vector<std::size_t> queue{state(u, edges)};
  seen[queue.front()] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t s = queue[head];
    const std::size_t vert = s / (edges + 1);
    const std::size_t in = s % (edges + 1);
    if (vert == v) {
      std::vector<std::size_t> ids;
      for (std::size_t cur = s; prev[cur] != kNone; cur = prev[cur]) {
        ids.push_back(cur % (edges + 1));
      }
      std::reverse(ids.begin(), ids.end());
      return ids;
    }
    for (std::size_t id : g.incident[vert]) {
      if (in != edges && g.edge[id].color == g.edge[in].color) continue;
      const Edge& e = g.edge[id].edge;
      std::size_t next = g.local(e.other(g.vertex[vert]));
      std::size_t ns = state(next, id);
      if (seen[ns]) continue;
      seen[ns] = true;
      prev[ns] = s;
      queue.push_back(ns);
    }
  }
  return {kNone};
}

// Exhaustive iterative deepening over simple rainbow paths.
class ExactPathSearch {
 public:
  explicit ExactPathSearch(const HGraph& g)
      : g_(g), on_path_(g.vertex.size(), false) {}

  std::vector<std::size_t> run(std::size_t u, std::size_t v) {
    target_ = v;
    for (limit_ = 1; limit_ < g_.vertex.size(); ++limit_) {
      path_.clear();
      std::fill(on_path_.begin(), on_path_.end(), false);
      on_path_[u] = true;
      if (extend(u)) return path_;
    }
    return {kNone};
  }

 private:
  bool extend(std::size_t vert) {
    if (vert == target_) return true;
    if (path_.size() == limit_) return false;
    for (std::size_t id : g_.incident[vert]) {
      bool clash = std::any_of(path_.begin(), path_.end(), [&](std::size_t p) {
        return g_.edge[p].color == g_.edge[id].color;
      });
      if (clash) continue;
      std::size_t next = g_.local(g_.edge[id].edge.other(g_.vertex[vert]));
      if (on_path_[next]) continue;
      on_path_[next] = true;
      path_.push_back(id);
      if (extend(next)) return true;
      path_.pop_back();
      on_path_[next] = false;
    }
    return false;
  }

  const HGraph& g_;
  std::vector<bool> on_path_;
  std::vector<std::size_t> path_;
  std::size_t target_ = 0;
  std::size_t limit_ = 0;
};

std::vector<RainbowStep> to_steps(const HGraph& g,
                                  const std::vector<std::size_t>& ids) {
  std::vector<RainbowStep> steps;
  steps.reserve(ids.size());
  for (std::size_t id : ids) steps.push_back(g.edge[id]);
  return steps;
}

bool visits_distinct_vertices(const HGraph& g, std::size_t u,
                              const std::vector<std::size_t>& ids) {
  std::vector<bool> seen(g.vertex.size(), false);
  seen[u] = true;
  Vertex cur = g.vertex[u];
  for (std::size_t id : ids) {
    cur = g.edge[id].edge.other(cur);
    std::size_t l = g.local(cur);
    if (seen[l]) return false;
    seen[l] = true;
  }
  return true;
}

std::vector<std::size_t> shortest_path_ids(const HGraph& g, std::size_t u,
                                           std::size_t v) {
  if (u == v) return {};
  // Inside H two edges share a colour only when they are the pair of one
  // attachment, so a simple path is rainbow iff it never turns a -> x -> b.
  // The shortest turn-respecting walk is therefore optimal whenever it is
  // simple; otherwise fall back to the exhaustive search.
  auto walk = forbidden_turn_walk(g, u, v);
  if (walk.size() == 1 && walk.front() == kNone) {
    throw ClaimViolation("H is not rainbow-connected");
  }
  if (visits_distinct_vertices(g, u, walk)) return walk;
  auto exact = ExactPathSearch(g).run(u, v);
  if (exact.size() == 1 && exact.front() == kNone) {
    throw ClaimViolation("H is not rainbow-connected");
  }
  return exact;
}

}  // namespace

std::vector<RainbowStep> shortest_rainbow_path_in_h(const HStructure& h,
                                                    Vertex u, Vertex v) {
  HGraph g(h);
  return to_steps(g, shortest_path_ids(g, g.local(u), g.local(v)));
}

std::vector<RainbowStep> rainbow_path_in_h(const HStructure& h, Vertex u,
                                           Vertex v) {
  auto path = shortest_rainbow_path_in_h(h, u, v);
  const std::size_t bound = h.t() / 2 + 1;
  if (path.size() > bound) {
    throw ClaimViolation("rainbow distance " + std::to_string(path.size()) +
                         " between " + std::to_string(u) + " and " +
                         std::to_string(v) + " exceeds floor(t/2)+1 = " +
                         std::to_string(bound));
  }
  return path;
}

RainbowDiameter rainbow_diameter(const HStructure& h) {
  HGraph g(h);
  const std::size_t bound = h.t() / 2 + 1;
  RainbowDiameter d;
  for (std::size_t a = 0; a < g.vertex.size(); ++a) {
    for (std::size_t b = a + 1; b < g.vertex.size(); ++b) {
      std::size_t dist = shortest_path_ids(g, a, b).size();
      d.max_distance = std::max(d.max_distance, dist);
      if (dist == bound) ++d.pairs_at_bound;
    }
  }
  d.claim_holds = d.max_distance <= bound &&
                  (h.t() % 2 == 1 || d.pairs_at_bound <= 1);
  return d;
}

Contraction contract(const RainbowInstance& inst, const HStructure& h) {
  const std::size_t n = inst.vertex_count();
  std::vector<bool> in_h(n, false);
  for (Vertex v : h.vertices) in_h[v] = true;
  std::vector<bool> h_color(inst.family_count(), false);
  h_color[h.seed_color] = true;
  for (const Attachment& at : h.attachments) h_color[at.color] = true;

  Contraction out;
  ContractionMap& map = out.map;
  map.parent_vertex_count = n;
  map.old_to_new.assign(n, kNoVertex);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!in_h[v]) map.old_to_new[v] = next++;
  }
  map.h = next;
  for (Vertex v : h.vertices) map.old_to_new[v] = map.h;

  std::vector<Family> families;
  for (Color c = 0; c < inst.family_count(); ++c) {
    if (h_color[c]) continue;
    Family f;
    for (const Edge& e : inst.family(c)) {
      f.emplace_back(map.old_to_new[e.u], map.old_to_new[e.v]);
    }
    families.push_back(std::move(f));
    map.parent_color.push_back(c);
  }
  out.quotient = RainbowInstance(static_cast<std::size_t>(next) + 1,
                                 std::move(families),
                                 RainbowInstance::Origin::contracted);
  return out;
}

namespace {

Edge lift_edge(const RainbowInstance& inst, const ContractionMap& map,
               const RainbowStep& step) {
  const Color parent = map.parent_color.at(step.color);
  for (const Edge& e : inst.family(parent)) {
    if (Edge(map.old_to_new[e.u], map.old_to_new[e.v]) == step.edge) return e;
  }
  throw InvalidInput("quotient edge has no preimage in its family");
}

}  // namespace

RainbowCycleCertificate lift_cycle(const RainbowInstance& inst,
                                   const HStructure& h,
                                   const ContractionMap& map,
                                   const RainbowCycleCertificate& quotient_cycle) {
  auto order = rainbow_cycle_vertices(quotient_cycle.steps);
  if (!order) throw InvalidInput("quotient certificate is not a cycle");
  const auto& steps = quotient_cycle.steps;
  const std::size_t k = steps.size();

  auto at_h = std::find(order->begin(), order->end(), map.h);
  RainbowCycleCertificate lifted;
  if (at_h == order->end()) {
    for (const RainbowStep& s : steps) {
      lifted.steps.push_back({lift_edge(inst, map, s),
                              map.parent_color[s.color]});
    }
    return lifted;
  }

  // Rotate so that the walk leaves h on the first step and returns to it on
  // the last one.
  const auto r = static_cast<std::size_t>(at_h - order->begin());
  std::vector<RainbowStep> path;
  for (std::size_t i = 0; i < k; ++i) {
    const RainbowStep& s = steps[(r + i) % k];
    path.push_back({lift_edge(inst, map, s), map.parent_color[s.color]});
  }
  Vertex u, v;
  if (k == 1) {
    u = path.front().edge.u;
    v = path.front().edge.v;
  } else {
    // Quotient vertices other than h have a unique preimage.
    auto preimage = [&](Vertex q) {
      for (Vertex w = 0; w < map.parent_vertex_count; ++w) {
        if (map.old_to_new[w] == q) return w;
      }
      throw InvalidInput("quotient vertex has no preimage");
    };
    Vertex first_out = preimage((*order)[(r + 1) % k]);
    Vertex last_out = preimage((*order)[(r + k - 1) % k]);
    u = path.front().edge.other(first_out);
    v = path.back().edge.other(last_out);
  }
  // path runs u -> ... -> v; close it with a rainbow path v -> u in H.
  for (const RainbowStep& s : rainbow_path_in_h(h, v, u)) path.push_back(s);
  lifted.steps = std::move(path);
  return lifted;
}

namespace {

RainbowCycleCertificate solve(const RainbowInstance& inst,
                              RainbowTrace* trace) {
  const std::size_t n = inst.vertex_count();
  const std::size_t p = inst.singleton_count();
  if (inst.family_count() != n || n == 0) {
    throw TheoremViolation("recursion reached an instance with " +
                           std::to_string(inst.family_count()) +
                           " families on " + std::to_string(n) + " vertices");
  }
  const auto bound = ceil_div(static_cast<std::int64_t>(n + p), 2);
  auto finish = [&](RainbowCycleCertificate c) {
    c.bound = Rational(bound);
    if (!validate_rainbow_cycle(inst, c)) {
      throw BoundViolation("rainbow cycle of length " +
                           std::to_string(c.length()) +
                           " fails validation against ceil((n+p)/2) = " +
                           std::to_string(bound));
    }
    return c;
  };

  for (Color c = 0; c < inst.family_count(); ++c) {
    for (const Edge& e : inst.family(c)) {
      if (e.is_loop()) {
        if (trace) trace->used_shortcut = true;
        return finish({{{e, c}}, std::nullopt});
      }
    }
  }
  if (auto shared = shared_edge_cycle(inst)) {
    if (trace) trace->used_shortcut = true;
    return finish(*shared);
  }
  if (p == 0) {
    if (trace) trace->used_exact_base_case = true;
    auto exact = oracles::shortest_rainbow_cycle_exact(inst);
    if (!exact.witness) {
      throw BoundViolation("no rainbow cycle in an all-size-2 instance on " +
                           std::to_string(n) + " vertices");
    }
    return finish(*exact.witness);
  }

  Color seed = 0;
  while (inst.family(seed).size() != 1) ++seed;
  HStructure h = build_greedy_subgraph(inst, seed);
  Contraction con = contract(inst, h);
  const std::size_t t = h.t();
  const std::size_t n2 = con.quotient.vertex_count();
  const std::size_t p2 = con.quotient.singleton_count();
  if (n2 != n - t - 1 || p2 != p - 1 || con.quotient.family_count() != n2) {
    throw TheoremViolation("contraction arithmetic failed");
  }
  const auto inner = ceil_div(static_cast<std::int64_t>(n2 + p2), 2);
  if (inner + static_cast<std::int64_t>(t / 2) + 1 > bound) {
    throw TheoremViolation("recursion bound arithmetic failed");
  }
  if (trace) trace->subgraphs.push_back(h);

  RainbowCycleCertificate sub = solve(con.quotient, trace);
  return finish(lift_cycle(inst, h, con.map, sub));
}

}  // namespace

RainbowCycleCertificate find_rainbow_cycle(const RainbowInstance& inst,
                                           RainbowTrace* trace) {
  if (!inst.simple_origin()) {
    throw InvalidInput("find_rainbow_cycle expects a simple-origin instance");
  }
  if (inst.family_count() != inst.vertex_count()) {
    throw InvalidInput("expected exactly n = " +
                       std::to_string(inst.vertex_count()) +
                       " families, got " +
                       std::to_string(inst.family_count()));
  }
  if (inst.vertex_count() == 0) {
    throw InvalidInput("instance has no vertices");
  }
  return solve(inst, trace);
}

}  // namespace shortcycle::rainbow
