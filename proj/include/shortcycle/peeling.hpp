#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "shortcycle/certificate.hpp"
#include "shortcycle/digraph.hpp"
#include "shortcycle/rational.hpp"

namespace shortcycle::peeling {

// Sum over v of 1 / deg+(v). Throws SinkPresent when some deg+(v) == 0.
Rational psi(const Digraph& d);

// Sum over v of 1 / (deg+(v) + 1). Defined for every digraph; 0 when empty.
Rational phi(const Digraph& d);

// Both sides of the removability inequality at v:
//   lhs = 1 / (deg+(v) + 1)
//   rhs = sum over in-neighbours u of 1 / (deg+(u) * (deg+(u) + 1))
// so that phi(D - v) = phi(D) - lhs + rhs.
struct RemovalBalance {
  Rational lhs;
  Rational rhs;
  bool removable() const { return lhs >= rhs; }
};

RemovalBalance removal_balance(const Digraph& d, Vertex v);

// Vertices v with phi(D - v) <= phi(D), ascending. Never empty for a
// nonempty digraph; an empty result there throws LemmaViolation.
std::vector<Vertex> removable_vertices(const Digraph& d);

// True iff deleting v leaves no sink, i.e. no vertex has v as its only
// out-neighbour.
bool deletion_keeps_sinkless(const Digraph& d, Vertex v);

// Chooses among the eligible vertices (ascending, nonempty) the one to
// delete next.
using VertexPolicy = std::function<Vertex(const Digraph&, std::span<const Vertex>)>;

Vertex smallest_index(const Digraph& d, std::span<const Vertex> eligible);

// One peeling step on a sink-less, nonempty digraph. Returns nullopt when
// d is a union of cycles; otherwise the vertex chosen by `policy` among
// those whose deletion keeps d sink-less without increasing phi.
// Throws InvalidInput (not sink-less / empty) or LemmaViolation.
std::optional<Vertex> peel_step(const Digraph& d,
                                const VertexPolicy& policy = smallest_index);

struct PeelingStep {
  Vertex removed;        // original index
  Rational phi_after;
};

struct PeelingTrace {
  Rational phi_initial;
  std::vector<PeelingStep> steps;
  Digraph terminal;
  // terminal vertex i is original vertex terminal_vertices[i].
  std::vector<Vertex> terminal_vertices;
};

// Repeats peel_step until a union of cycles remains. Checks along the way
// that phi never increases and every intermediate graph stays sink-less.
PeelingTrace peel(const Digraph& d,
                  const VertexPolicy& policy = smallest_index);

// Shortest cycle of the peeled union of cycles, in original indices and
// canonical rotation, certified against 2 * phi(D).
CycleCertificate short_cycle_via_peeling(
    const Digraph& d, const VertexPolicy& policy = smallest_index);

// Same, reusing an existing trace of d.
CycleCertificate short_cycle_from_trace(const PeelingTrace& trace);

}  // namespace shortcycle::peeling
