#pragma once

#include <optional>
#include <vector>

#include "shortcycle/certificate.hpp"
#include "shortcycle/rainbow_instance.hpp"

namespace shortcycle::rainbow {

// A new vertex x joined to two distinct vertices a, b of the current
// subgraph by the two edges of one size-2 family.
struct Attachment {
  Vertex x;
  Vertex a;
  Vertex b;
  Color color;
};

// Subgraph grown from a single seed edge by attachments. Vertex order is
// seed.u, seed.v, x_1, ..., x_t; |V(H)| = t + 2.
struct HStructure {
  Color seed_color = 0;
  Edge seed;
  std::vector<Attachment> attachments;
  std::vector<Vertex> vertices;

  std::size_t t() const { return attachments.size(); }
  bool contains(Vertex v) const;
  // Seed first, then x_i a_i, x_i b_i for each attachment in order.
  std::vector<RainbowStep> edges() const;
};

// A length-2 cycle formed by one vertex pair present in two distinct
// families, or nullopt. Loops are ignored.
std::optional<RainbowCycleCertificate> shared_edge_cycle(
    const RainbowInstance& inst);

// Grows H from the singleton family `seed_color`, each step taking the
// smallest unused colour that can attach, until none can. Requires the
// families to be pairwise edge-disjoint. Throws SeedNotSingleton.
HStructure build_greedy_subgraph(const RainbowInstance& inst,
                                 Color seed_color);

// Shortest rainbow path from u to v inside H (steps oriented from u to v);
// empty when u == v. Exact.
std::vector<RainbowStep> shortest_rainbow_path_in_h(const HStructure& h,
                                                    Vertex u, Vertex v);

// As above, but throws ClaimViolation if the path is longer than
// floor(t/2) + 1.
std::vector<RainbowStep> rainbow_path_in_h(const HStructure& h, Vertex u,
                                           Vertex v);

struct RainbowDiameter {
  std::size_t max_distance = 0;
  // Unordered pairs at distance exactly floor(t/2) + 1.
  std::size_t pairs_at_bound = 0;
  // max_distance <= floor(t/2) + 1, and for even t at most one pair
  // attains that value.
  bool claim_holds = true;
};

RainbowDiameter rainbow_diameter(const HStructure& h);

// Quotient of inst by V(H): V(H) becomes a single vertex h, the families of
// H are dropped, every other family keeps its size with mapped endpoints
// (loops and parallel edges kept).
struct ContractionMap {
  std::size_t parent_vertex_count = 0;
  std::vector<Vertex> old_to_new;
  Vertex h = 0;
  // colour in the quotient -> colour in the parent
  std::vector<Color> parent_color;
};

struct Contraction {
  RainbowInstance quotient;
  ContractionMap map;
};

Contraction contract(const RainbowInstance& inst, const HStructure& h);

// Lifts a rainbow cycle of the quotient back to inst: unchanged when it
// avoids h, otherwise closed up through H with rainbow_path_in_h.
RainbowCycleCertificate lift_cycle(const RainbowInstance& inst,
                                   const HStructure& h,
                                   const ContractionMap& map,
                                   const RainbowCycleCertificate& quotient_cycle);

// Everything the recursion built, outermost level first.
struct RainbowTrace {
  std::vector<HStructure> subgraphs;
  bool used_exact_base_case = false;
  bool used_shortcut = false;
};

// Rainbow cycle of length <= ceil((n + p) / 2) for a simple-origin instance
// with exactly n families of size 1 or 2. Colours refer to the families of
// inst. Throws InvalidInput on a bad instance and BoundViolation if the
// bound fails.
RainbowCycleCertificate find_rainbow_cycle(const RainbowInstance& inst,
                                           RainbowTrace* trace = nullptr);

}  // namespace shortcycle::rainbow
