#include "shortcycle/certificate.hpp"

#include <algorithm>
#include <unordered_set>

namespace shortcycle {

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::two_phi:
      return "two-phi";
    case BoundKind::ceil_n_plus_p_over_2:
      return "ceil-n-plus-p-over-2";
    case BoundKind::exact_girth:
      return "exact-girth";
  }
  return "unknown";
}

std::optional<BoundKind> bound_kind_from_string(std::string_view s) {
  for (BoundKind k : {BoundKind::two_phi, BoundKind::ceil_n_plus_p_over_2,
                      BoundKind::exact_girth}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

std::vector<Vertex> canonical_rotation(std::vector<Vertex> cycle) {
  auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
  return cycle;
}

bool is_directed_cycle(const Digraph& d, std::span<const Vertex> vs) {
  const std::size_t k = vs.size();
  if (k < 2) return false;
  std::vector<bool> seen(d.vertex_count(), false);
  for (Vertex v : vs) {
    if (v >= d.vertex_count() || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!d.has_arc(vs[i], vs[(i + 1) % k])) return false;
  }
  return true;
}

bool validate_cycle(const Digraph& d, const CycleCertificate& c) {
  return is_directed_cycle(d, c.vertices) &&
         Rational(static_cast<std::int64_t>(c.length())) <= c.bound;
}

std::optional<std::vector<Vertex>> rainbow_cycle_vertices(
    std::span<const RainbowStep> steps) {
  const std::size_t k = steps.size();
  if (k == 0) return std::nullopt;
  if (k == 1) {
    if (!steps[0].edge.is_loop()) return std::nullopt;
    return std::vector<Vertex>{steps[0].edge.u};
  }
  // Any non-loop edge orientation may be the starting one; try both.
  for (Vertex start : {steps[0].edge.u, steps[0].edge.v}) {
    std::vector<Vertex> walk;
    walk.reserve(k);
    Vertex cur = start;
    bool ok = true;
    for (const RainbowStep& s : steps) {
      if (s.edge.is_loop() || !s.edge.touches(cur)) {
        ok = false;
        break;
      }
      walk.push_back(cur);
      cur = s.edge.other(cur);
    }
    if (!ok || cur != start) continue;
    std::unordered_set<Vertex> distinct(walk.begin(), walk.end());
    if (distinct.size() != k) continue;
    return walk;
  }
  return std::nullopt;
}

bool validate_rainbow_cycle(const RainbowInstance& inst,
                            const RainbowCycleCertificate& c) {
  if (c.steps.empty()) return false;
  std::unordered_set<Color> colors;
  for (const RainbowStep& s : c.steps) {
    if (!colors.insert(s.color).second) return false;
    if (!inst.family_contains(s.color, s.edge)) return false;
  }
  if (c.steps.size() == 1 && !inst.allows_loops()) return false;
  if (!rainbow_cycle_vertices(c.steps)) return false;
  if (c.bound &&
      Rational(static_cast<std::int64_t>(c.steps.size())) > *c.bound) {
    return false;
  }
  return true;
}

}  // namespace shortcycle
