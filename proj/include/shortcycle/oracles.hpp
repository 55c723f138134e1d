#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "shortcycle/certificate.hpp"
#include "shortcycle/digraph.hpp"
#include "shortcycle/rainbow_instance.hpp"

// Brute-force ground truth. Everything here is independent of the peeling
// and contraction algorithms it is used to check.
namespace shortcycle::oracles {

inline constexpr std::size_t kMaxRainbowVertices = 16;
inline constexpr std::size_t kMaxRainbowFamilies = 64;
inline constexpr std::size_t kMaxEnumeratedCycles = 10'000'000;
inline constexpr std::size_t kMaxPairSearchVertices = 64;

struct GirthResult {
  // nullopt means infinite (acyclic).
  std::optional<std::size_t> girth;
  std::optional<CycleCertificate> witness;
};

// Exact girth by a breadth-first search from every vertex. The witness is
// in canonical rotation, kind exact-girth, bound equal to its length.
GirthResult girth_exact(const Digraph& d);

using Cycle = std::vector<Vertex>;

// Calls `visit` once for every directed simple cycle of length <= max_length,
// in canonical rotation (smallest vertex first). Throws ResourceCap after
// kMaxEnumeratedCycles cycles.
void for_each_cycle(const Digraph& d, std::size_t max_length,
                    const std::function<void(std::span<const Vertex>)>& visit);

std::vector<Cycle> enumerate_cycles(const Digraph& d, std::size_t max_length);

struct TwoCyclePair {
  Cycle first;
  Cycle second;
  std::vector<Vertex> intersection;  // sorted
  // Number of out-degree-1 vertices of the host digraph.
  std::size_t out_degree_one = 0;
  // True when the host has a single cycle and both entries are that cycle.
  bool same_cycle = false;
  // Host is sink-less with every out-degree in {1, 2}; only then is
  // |intersection| <= out_degree_one + 1 asserted.
  bool in_hypothesis = false;
};

// Over all unordered pairs of cycles (a cycle may be paired with itself)
// returns one minimising |V(C1) ∩ V(C2)|, ties broken by |C1| + |C2| and
// then by enumeration order. Throws Acyclic when d has no cycle and
// TheoremViolation when the intersection bound fails in hypothesis.
TwoCyclePair two_cycles_min_intersection(const Digraph& d);

// Requires 1 <= deg+(v) <= 2 everywhere. The shorter cycle of
// two_cycles_min_intersection, certified against ceil((n + p) / 2).
CycleCertificate deg2_short_cycle(const Digraph& d);

struct RainbowGirthResult {
  // nullopt means no rainbow cycle exists.
  std::optional<std::size_t> length;
  std::optional<RainbowCycleCertificate> witness;
};

// Exact shortest rainbow cycle by iterative deepening over simple paths
// with a used-colour set; each cycle is rooted at its smallest vertex.
// Loops (length 1) and parallel edges of distinct colours (length 2) are
// found first. Throws ResourceCap above kMaxRainbowVertices vertices or
// kMaxRainbowFamilies families.
RainbowGirthResult shortest_rainbow_cycle_exact(const RainbowInstance& inst);

}  // namespace shortcycle::oracles
