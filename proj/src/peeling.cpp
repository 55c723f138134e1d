#include "shortcycle/peeling.hpp"

#include <algorithm>
#include <string>

#include "shortcycle/error.hpp"

namespace shortcycle::peeling {

Rational psi(const Digraph& d) {
  Rational sum;
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    const auto k = static_cast<std::int64_t>(d.out_degree(v));
    if (k == 0) {
      throw SinkPresent(v, "psi undefined: vertex " + std::to_string(v) +
                               " is a sink");
    }
    sum += reciprocal(k);
  }
  return sum;
}

Rational phi(const Digraph& d) {
  Rational sum;
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    sum += reciprocal(static_cast<std::int64_t>(d.out_degree(v)) + 1);
  }
  return sum;
}

RemovalBalance removal_balance(const Digraph& d, Vertex v) {
  RemovalBalance b;
  b.lhs = reciprocal(static_cast<std::int64_t>(d.out_degree(v)) + 1);
  for (Vertex u : d.in_neighbors(v)) {
    const auto k = static_cast<std::int64_t>(d.out_degree(u));
    b.rhs += reciprocal(k * (k + 1));
  }
  return b;
}

std::vector<Vertex> removable_vertices(const Digraph& d) {
  std::vector<Vertex> result;
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (removal_balance(d, v).removable()) result.push_back(v);
  }
  if (result.empty() && !d.empty()) {
    throw LemmaViolation(
        "no vertex v with phi(D - v) <= phi(D) in a nonempty digraph");
  }
  return result;
}

bool deletion_keeps_sinkless(const Digraph& d, Vertex v) {
  for (Vertex u : d.in_neighbors(v)) {
    if (d.out_degree(u) == 1) return false;
  }
  return true;
}

Vertex smallest_index(const Digraph&, std::span<const Vertex> eligible) {
  return eligible.front();
}

namespace {

void require_sinkless_nonempty(const Digraph& d) {
  if (d.empty()) throw InvalidInput("peeling needs a nonempty digraph");
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (d.out_degree(v) == 0) {
      throw SinkPresent(v, "digraph is not sink-less: vertex " +
                               std::to_string(v) + " is a sink");
    }
  }
}

}  // namespace

std::optional<Vertex> peel_step(const Digraph& d, const VertexPolicy& policy) {
  require_sinkless_nonempty(d);
  if (is_union_of_cycles(d)) return std::nullopt;
  std::vector<Vertex> eligible;
  for (Vertex v : removable_vertices(d)) {
    if (deletion_keeps_sinkless(d, v)) eligible.push_back(v);
  }
  if (eligible.empty()) {
    throw LemmaViolation(
        "sink-less digraph that is not a union of cycles has no vertex whose "
        "deletion keeps it sink-less without increasing phi");
  }
  Vertex chosen = policy(d, eligible);
  if (std::find(eligible.begin(), eligible.end(), chosen) == eligible.end()) {
    throw InvalidInput("peeling policy chose an ineligible vertex");
  }
  return chosen;
}

PeelingTrace peel(const Digraph& d, const VertexPolicy& policy) {
  PeelingTrace trace;
  trace.phi_initial = phi(d);
  Digraph current = d;
  std::vector<Vertex> original(d.vertex_count());
  for (Vertex v = 0; v < original.size(); ++v) original[v] = v;
  Rational current_phi = trace.phi_initial;

  while (auto v = peel_step(current, policy)) {
    VertexDeletion del = remove_vertex(current, *v);
    Rational next_phi = phi(del.graph);
    if (next_phi > current_phi) {
      throw LemmaViolation("phi increased from " + current_phi.to_string() +
                           " to " + next_phi.to_string());
    }
    if (!is_sinkless(del.graph)) {
      throw LemmaViolation("peeling produced a sink");
    }
    trace.steps.push_back({original[*v], next_phi});
    std::vector<Vertex> remapped(del.new_to_old.size());
    for (Vertex i = 0; i < remapped.size(); ++i) {
      remapped[i] = original[del.new_to_old[i]];
    }
    original = std::move(remapped);
    current = std::move(del.graph);
    current_phi = std::move(next_phi);
  }

  trace.terminal = std::move(current);
  trace.terminal_vertices = std::move(original);
  const auto size = static_cast<std::int64_t>(trace.terminal.vertex_count());
  if (current_phi * Rational(2) != Rational(size)) {
    throw LemmaViolation("terminal union of cycles has phi " +
                         current_phi.to_string() + " != |V(K)|/2");
  }
  return trace;
}

CycleCertificate short_cycle_from_trace(const PeelingTrace& trace) {
  const Digraph& k = trace.terminal;
  std::vector<bool> seen(k.vertex_count(), false);
  std::vector<Vertex> best;
  for (Vertex start = 0; start < k.vertex_count(); ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> cycle;
    for (Vertex v = start; !seen[v]; v = k.out_neighbors(v).front()) {
      seen[v] = true;
      cycle.push_back(trace.terminal_vertices[v]);
    }
    if (best.empty() || cycle.size() < best.size()) best = std::move(cycle);
  }
  CycleCertificate c{canonical_rotation(std::move(best)),
                     trace.phi_initial * Rational(2), BoundKind::two_phi};
  if (Rational(static_cast<std::int64_t>(c.length())) > c.bound) {
    throw BoundViolation("peeled cycle of length " +
                         std::to_string(c.length()) + " exceeds 2*phi = " +
                         c.bound.to_string());
  }
  return c;
}

CycleCertificate short_cycle_via_peeling(const Digraph& d,
                                         const VertexPolicy& policy) {
  return short_cycle_from_trace(peel(d, policy));
}

}  // namespace shortcycle::peeling
