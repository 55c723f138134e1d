#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "shortcycle/digraph.hpp"
#include "shortcycle/rainbow_instance.hpp"
#include "shortcycle/rational.hpp"

namespace shortcycle {

enum class BoundKind {
  two_phi,                // length <= 2 * phi(D)
  ceil_n_plus_p_over_2,   // length <= ceil((n + p) / 2)
  exact_girth,            // length == girth, bound is the girth itself
};

std::string_view to_string(BoundKind kind);
std::optional<BoundKind> bound_kind_from_string(std::string_view s);

// Directed cycle v_0 -> v_1 -> ... -> v_{k-1} -> v_0 together with the
// bound it certifies.
struct CycleCertificate {
  std::vector<Vertex> vertices;
  Rational bound;
  BoundKind kind = BoundKind::exact_girth;

  std::size_t length() const { return vertices.size(); }
  friend bool operator==(const CycleCertificate&,
                         const CycleCertificate&) = default;
};

// Rotates a cycle so that its smallest vertex comes first.
std::vector<Vertex> canonical_rotation(std::vector<Vertex> cycle);

// True iff the sequence is a directed cycle of d: k >= 2, distinct
// in-range vertices, every arc v_i -> v_{i+1 mod k} present.
bool is_directed_cycle(const Digraph& d, std::span<const Vertex> cycle);

// True iff the sequence is a directed cycle of d (k >= 2, distinct vertices,
// every consecutive arc present) and its length does not exceed the bound.
bool validate_cycle(const Digraph& d, const CycleCertificate& c);

struct RainbowStep {
  Edge edge;
  Color color = 0;
  friend bool operator==(const RainbowStep&, const RainbowStep&) = default;
};

struct RainbowCycleCertificate {
  std::vector<RainbowStep> steps;
  // Bound the producing algorithm promises, if any.
  std::optional<Rational> bound;

  std::size_t length() const { return steps.size(); }
  friend bool operator==(const RainbowCycleCertificate&,
                         const RainbowCycleCertificate&) = default;
};

// Vertex sequence v_0..v_{k-1} such that step i joins v_i and v_{i+1 mod k}
// with all v_i distinct, or nullopt when the steps do not form such a
// closed walk. Ignores colours.
std::optional<std::vector<Vertex>> rainbow_cycle_vertices(
    std::span<const RainbowStep> steps);

// Colours pairwise distinct, each edge taken from the family of its colour,
// the edges close up into a cycle with distinct vertices, and the length
// respects the bound when one is attached. Length 1 (a loop) is accepted
// only when the instance allows loops.
bool validate_rainbow_cycle(const RainbowInstance& inst,
                            const RainbowCycleCertificate& c);

}  // namespace shortcycle
