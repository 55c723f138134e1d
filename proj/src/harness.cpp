#include "shortcycle/harness.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>
#include <random>
#include <thread>

#include "shortcycle/error.hpp"
#include "shortcycle/io.hpp"
#include "shortcycle/oracles.hpp"
#include "shortcycle/peeling.hpp"
#include "shortcycle/rainbow.hpp"

namespace shortcycle::harness {

using nlohmann::ordered_json;

std::string_view to_string(Check c) {
  switch (c) {
    case Check::two_phi: return "two-phi";
    case Check::two_psi_strict: return "two-psi-strict";
    case Check::chc: return "chc";
    case Check::two_cycles: return "two-cycles";
    case Check::deg2_girth: return "deg2-girth";
    case Check::rainbow_bound: return "rainbow-bound";
    case Check::rd_claim: return "rd-claim";
    case Check::eq1_identity: return "eq1-identity";
    case Check::rchc: return "rchc";
  }
  return "unknown";
}

std::optional<Check> check_from_string(std::string_view s) {
  for (Check c : kAllChecks) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

bool is_conjecture(Check c) { return c == Check::chc || c == Check::rchc; }

// ---------------------------------------------------------------------------
// Instance spaces

namespace {

std::vector<Arc> all_arcs(std::size_t n) {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) arcs.push_back({u, v});
    }
  }
  return arcs;
}

}  // namespace

std::uint64_t labeled_count(std::size_t n) {
  if (n > kMaxLabeledVertices) {
    throw CapExceeded("labeled enumeration supports n <= " +
                      std::to_string(kMaxLabeledVertices));
  }
  return std::uint64_t{1} << (n * (n == 0 ? 0 : n - 1));
}

Digraph labeled_digraph(std::size_t n, std::uint64_t index) {
  static thread_local std::size_t cached_n = static_cast<std::size_t>(-1);
  static thread_local std::vector<Arc> arcs_of_n;
  if (cached_n != n) {
    arcs_of_n = all_arcs(n);
    cached_n = n;
  }
  std::vector<Arc> arcs;
  for (std::size_t k = 0; k < arcs_of_n.size(); ++k) {
    if (index >> k & 1) arcs.push_back(arcs_of_n[k]);
  }
  return Digraph(n, arcs);
}

bool is_strongly_connected(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  if (n == 0) return true;
  for (bool forward : {true, false}) {
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      auto next = forward ? d.out_neighbors(v) : d.in_neighbors(v);
      for (Vertex w : next) {
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != n) return false;
  }
  return true;
}

bool passes(const Digraph& d, LabeledFilter filter) {
  switch (filter) {
    case LabeledFilter::none: return true;
    case LabeledFilter::sinkless: return is_sinkless(d);
    case LabeledFilter::strongly_connected: return is_strongly_connected(d);
  }
  return false;
}

void enumerate_digraphs(std::size_t n, LabeledFilter filter,
                        const std::function<void(const Digraph&)>& visit) {
  const std::uint64_t total = labeled_count(n);
  for (std::uint64_t i = 0; i < total; ++i) {
    Digraph d = labeled_digraph(n, i);
    if (passes(d, filter)) visit(d);
  }
}

OutmapSpace::OutmapSpace(std::size_t n, std::size_t dmin, std::size_t dmax)
    : n_(n) {
  if (n > kMaxOutmapVertices) {
    throw CapExceeded("out-degree map enumeration supports n <= " +
                      std::to_string(kMaxOutmapVertices));
  }
  if (dmin > dmax) throw InvalidInput("dmin > dmax");
  // Subsets of {0..n-2} (indices among the other vertices) by size, then
  // lexicographically.
  const std::size_t others = n == 0 ? 0 : n - 1;
  for (std::size_t d = dmin; d <= std::min(dmax, others); ++d) {
    std::vector<bool> pick(others, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(d), true);
    do {
      std::vector<Vertex> subset;
      for (std::size_t k = 0; k < others; ++k) {
        if (pick[k]) subset.push_back(static_cast<Vertex>(k));
      }
      choices_.push_back(std::move(subset));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  for (std::size_t v = 0; v < n; ++v) size_ *= choices_.size();
}

Digraph OutmapSpace::at(std::uint64_t index) const {
  std::vector<Arc> arcs;
  const std::uint64_t radix = choices_.size();
  for (Vertex v = 0; v < n_; ++v) {
    const auto& subset = choices_[index % radix];
    index /= radix;
    for (Vertex k : subset) arcs.push_back({v, k < v ? k : k + 1});
  }
  return Digraph(n_, arcs);
}

void enumerate_outmaps(std::size_t n, std::size_t dmin, std::size_t dmax,
                       const std::function<void(const Digraph&)>& visit) {
  OutmapSpace space(n, dmin, dmax);
  for (std::uint64_t i = 0; i < space.size(); ++i) visit(space.at(i));
}

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 of seed advanced by index steps.
  std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RainbowInstance random_rainbow_instance(std::size_t n, std::size_t p,
                                        std::uint64_t seed, RainbowMode mode) {
  if (n < 2) throw InvalidInput("random rainbow instance needs n >= 2");
  if (p > n) throw InvalidInput("p exceeds n");
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> sizes(n, 2);
  std::fill(sizes.begin(), sizes.begin() + static_cast<long>(p), 1);
  std::shuffle(sizes.begin(), sizes.end(), rng);

  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  std::vector<Family> families(n);
  if (mode == RainbowMode::disjoint) {
    const std::size_t needed = 2 * n - p;
    if (needed > edges.size()) {
      throw Infeasible("disjoint mode needs " + std::to_string(needed) +
                       " distinct edges but K_" + std::to_string(n) +
                       " has " + std::to_string(edges.size()));
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < sizes[i]; ++k) {
        families[i].push_back(edges[next++]);
      }
    }
  } else {
    if (edges.size() < 2 && p < n) {
      throw Infeasible("a size-2 family needs two distinct edges");
    }
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    for (std::size_t i = 0; i < n; ++i) {
      families[i].push_back(edges[pick(rng)]);
      if (sizes[i] == 2) {
        Edge e;
        do {
          e = edges[pick(rng)];
        } while (e == families[i][0]);
        families[i].push_back(e);
      }
    }
  }
  return RainbowInstance(n, std::move(families));
}

// ---------------------------------------------------------------------------
// Reports

std::uint64_t Report::theorem_violations() const {
  std::uint64_t total = 0;
  for (Check c : kAllChecks) {
    if (!is_conjecture(c)) total += tally(c).failed;
  }
  return total;
}

namespace {

bool event_before(const Event& a, const Event& b) {
  if (a.n != b.n) return a.n < b.n;
  if (a.index != b.index) return a.index < b.index;
  return static_cast<int>(a.check) < static_cast<int>(b.check);
}

void merge_events(std::vector<Event>& into, const std::vector<Event>& from,
                  std::size_t keep) {
  into.insert(into.end(), from.begin(), from.end());
  std::sort(into.begin(), into.end(), event_before);
  if (into.size() > keep) into.resize(keep);
}

template <typename T>
bool key_before(const T& a, const T& b) {
  return a.n != b.n ? a.n < b.n : a.index < b.index;
}

}  // namespace

void Report::merge(const Report& other) {
  instances += other.instances;
  evaluations += other.evaluations;
  for (std::size_t i = 0; i < tallies.size(); ++i) {
    tallies[i].applicable += other.tallies[i].applicable;
    tallies[i].passed += other.tallies[i].passed;
    tallies[i].failed += other.tallies[i].failed;
  }
  merge_events(violations, other.violations, config.max_recorded);
  merge_events(findings, other.findings, config.max_recorded);
  if (other.max_girth_over_psi) {
    const auto& o = *other.max_girth_over_psi;
    if (!max_girth_over_psi || o.ratio > max_girth_over_psi->ratio ||
        (o.ratio == max_girth_over_psi->ratio &&
         key_before(o, *max_girth_over_psi))) {
      max_girth_over_psi = o;
    }
  }
  tight_two_phi += other.tight_two_phi;
  union_of_cycles += other.union_of_cycles;
  tight_union_of_cycles += other.tight_union_of_cycles;
  if (other.tightness_witness &&
      (!tightness_witness ||
       key_before(*other.tightness_witness, *tightness_witness))) {
    tightness_witness = other.tightness_witness;
  }
  subgraphs_checked += other.subgraphs_checked;
}

// ---------------------------------------------------------------------------
// Checks

namespace {

bool wants(std::span<const Check> checks, Check c) {
  return std::find(checks.begin(), checks.end(), c) != checks.end();
}

void record(Report& r, Check c, bool ok, std::size_t n, std::uint64_t index,
            const std::function<std::string()>& instance,
            const std::string& detail) {
  CheckTally& t = r.tally(c);
  ++t.applicable;
  if (ok) {
    ++t.passed;
    return;
  }
  ++t.failed;
  auto& sink = is_conjecture(c) ? r.findings : r.violations;
  if (sink.size() < r.config.max_recorded) {
    sink.push_back({c, n, index, instance(), detail});
  }
}

}  // namespace

void check_digraph(const Digraph& d, std::uint64_t index,
                   std::span<const Check> checks, Report& report) {
  using peeling::phi;
  using peeling::psi;
  const std::size_t n = d.vertex_count();
  ++report.instances;
  auto text = [&] { return format_digraph(d); };
  const bool sinkless = !d.empty() && is_sinkless(d);

  std::optional<oracles::GirthResult> girth_cache;
  auto girth = [&]() -> const oracles::GirthResult& {
    if (!girth_cache) girth_cache = oracles::girth_exact(d);
    return *girth_cache;
  };
  std::optional<Rational> phi_cache;
  auto phi_d = [&]() -> const Rational& {
    if (!phi_cache) phi_cache = phi(d);
    return *phi_cache;
  };

  if (wants(checks, Check::eq1_identity)) {
    Rational lhs, rhs;
    for (Vertex v = 0; v < n; ++v) {
      auto b = peeling::removal_balance(d, v);
      lhs += b.lhs;
      rhs += b.rhs;
    }
    // Vertices that are sinks contribute to phi but never appear on a
    // right-hand side, so the identity is stated for sink-less digraphs;
    // in general rhs == phi minus the sinks' terms.
    Rational sink_terms;
    for (Vertex v = 0; v < n; ++v) {
      if (d.out_degree(v) == 0) sink_terms += Rational(1);
    }
    bool ok = lhs == phi_d() && rhs == phi_d() - sink_terms;
    record(report, Check::eq1_identity, ok, n, index, text,
           "lhs sum " + lhs.to_string() + ", rhs sum " + rhs.to_string() +
               ", phi " + phi_d().to_string());
  }

  if (sinkless && wants(checks, Check::two_phi)) {
    bool ok = false;
    std::string detail;
    const std::size_t g = *girth().girth;
    try {
      auto trace = peeling::peel(d);
      auto cert = peeling::short_cycle_from_trace(trace);
      const Rational two_phi = phi_d() * Rational(2);
      ok = validate_cycle(d, cert) && Rational(std::int64_t(g)) <= two_phi &&
           cert.length() >= g;
      detail = "girth " + std::to_string(g) + ", certificate length " +
               std::to_string(cert.length()) + ", 2phi " + two_phi.to_string();
      if (Rational(std::int64_t(g)) == two_phi) {
        ++report.tight_two_phi;
        Event w{Check::two_phi, n, index, "", "girth == 2phi"};
        if (!report.tightness_witness || key_before(w, *report.tightness_witness)) {
          w.instance = text();
          report.tightness_witness = w;
        }
      }
      if (is_union_of_cycles(d)) {
        ++report.union_of_cycles;
        if (Rational(std::int64_t(g)) == two_phi) {
          ++report.tight_union_of_cycles;
        }
      }
    } catch (const TheoremViolation& e) {
      detail = e.what();
    }
    record(report, Check::two_phi, ok, n, index, text, detail);
  }

  if (sinkless && wants(checks, Check::two_psi_strict)) {
    const std::size_t g = *girth().girth;
    const Rational s = psi(d);
    const Rational ratio = Rational(std::int64_t(g)) / s;
    bool ok = ratio < Rational(2);
    record(report, Check::two_psi_strict, ok, n, index, text,
           "girth " + std::to_string(g) + ", psi " + s.to_string());
    auto& best = report.max_girth_over_psi;
    if (!best || ratio > best->ratio ||
        (ratio == best->ratio && (n < best->n || (n == best->n && index < best->index)))) {
      best = RatioRecord{ratio, g, s, n, index, text()};
    }
  }

  if (sinkless && wants(checks, Check::chc)) {
    const std::size_t g = *girth().girth;
    const auto bound = ceil_div(static_cast<std::int64_t>(n),
                                static_cast<std::int64_t>(d.min_out_degree()));
    record(report, Check::chc, static_cast<std::int64_t>(g) <= bound, n, index,
           text,
           "girth " + std::to_string(g) + " > ceil(n/delta+) = " +
               std::to_string(bound));
  }

  if (wants(checks, Check::two_cycles) && girth().girth) {
    bool ok = false;
    std::string detail;
    try {
      auto pair = oracles::two_cycles_min_intersection(d);
      ok = is_directed_cycle(d, pair.first) &&
           is_directed_cycle(d, pair.second);
      detail = "intersection " + std::to_string(pair.intersection.size()) +
               ", p " + std::to_string(pair.out_degree_one);
      if (pair.in_hypothesis) {
        ok = ok && pair.intersection.size() <= pair.out_degree_one + 1;
      }
    } catch (const TheoremViolation& e) {
      detail = e.what();
    }
    record(report, Check::two_cycles, ok, n, index, text, detail);
  }

  if (wants(checks, Check::deg2_girth) && !d.empty() &&
      d.min_out_degree() >= 1 && d.max_out_degree() <= 2) {
    bool ok = false;
    std::string detail;
    std::size_t p = 0;
    for (Vertex v = 0; v < n; ++v) p += d.out_degree(v) == 1;
    const auto bound = ceil_div(static_cast<std::int64_t>(n + p), 2);
    const std::size_t g = *girth().girth;
    try {
      auto cert = oracles::deg2_short_cycle(d);
      ok = validate_cycle(d, cert) && static_cast<std::int64_t>(g) <= bound &&
           cert.length() >= g &&
           psi(d).ceil() == BigInt(bound);
      detail = "girth " + std::to_string(g) + ", ceil((n+p)/2) " +
               std::to_string(bound);
    } catch (const TheoremViolation& e) {
      detail = e.what();
    }
    record(report, Check::deg2_girth, ok, n, index, text, detail);
  }
}

void check_rainbow(const RainbowInstance& inst, std::uint64_t index,
                   std::span<const Check> checks, Report& report) {
  const std::size_t n = inst.vertex_count();
  ++report.instances;
  auto text = [&] { return format_rainbow(inst); };

  if (wants(checks, Check::rainbow_bound) || wants(checks, Check::rd_claim)) {
    rainbow::RainbowTrace trace;
    bool ok = false;
    std::string detail;
    try {
      auto cert = rainbow::find_rainbow_cycle(inst, &trace);
      const auto bound = ceil_div(
          static_cast<std::int64_t>(n + inst.singleton_count()), 2);
      auto exact = oracles::shortest_rainbow_cycle_exact(inst);
      ok = validate_rainbow_cycle(inst, cert) &&
           static_cast<std::int64_t>(cert.length()) <= bound &&
           exact.length && *exact.length <= cert.length() &&
           validate_rainbow_cycle(inst, *exact.witness);
      detail = "length " + std::to_string(cert.length()) + ", bound " +
               std::to_string(bound) + ", exact " +
               (exact.length ? std::to_string(*exact.length) : "inf");
    } catch (const TheoremViolation& e) {
      detail = e.what();
    }
    if (wants(checks, Check::rainbow_bound)) {
      record(report, Check::rainbow_bound, ok, n, index, text, detail);
    }
    if (wants(checks, Check::rd_claim)) {
      bool holds = true;
      std::string rd_detail;
      for (const auto& h : trace.subgraphs) {
        ++report.subgraphs_checked;
        auto rd = rainbow::rainbow_diameter(h);
        if (!rd.claim_holds) {
          holds = false;
          rd_detail = "t " + std::to_string(h.t()) + ", max distance " +
                      std::to_string(rd.max_distance) + ", pairs at bound " +
                      std::to_string(rd.pairs_at_bound);
        }
      }
      record(report, Check::rd_claim, holds, n, index, text, rd_detail);
    }
  }

  if (wants(checks, Check::rchc)) {
    auto exact = oracles::shortest_rainbow_cycle_exact(inst);
    const auto bound = ceil_div(static_cast<std::int64_t>(n), 2);
    bool ok = exact.length && static_cast<std::int64_t>(*exact.length) <= bound;
    record(report, Check::rchc, ok, n, index, text,
           "rainbow girth " +
               (exact.length ? std::to_string(*exact.length) : "inf") +
               " > ceil(n/2) = " + std::to_string(bound));
  }
}

// ---------------------------------------------------------------------------
// Suite

void validate(const SuiteConfig& cfg) {
  if (cfg.n_min > cfg.n_max) throw InvalidInput("n range is empty");
  if (cfg.workers == 0) throw InvalidInput("need at least one worker");
  switch (cfg.generator) {
    case Generator::labeled:
      if (cfg.n_max > kMaxLabeledVertices) {
        throw CapExceeded("labeled generator supports n <= " +
                          std::to_string(kMaxLabeledVertices));
      }
      break;
    case Generator::outmaps:
      if (cfg.n_max > kMaxOutmapVertices) {
        throw CapExceeded("outmaps generator supports n <= " +
                          std::to_string(kMaxOutmapVertices));
      }
      if (cfg.dmin > cfg.dmax) throw InvalidInput("dmin > dmax");
      break;
    case Generator::random_rainbow:
      if (cfg.n_max > kMaxRainbowVertices) {
        throw CapExceeded("rainbow generator supports n <= " +
                          std::to_string(kMaxRainbowVertices));
      }
      if (cfg.n_min < 2) throw InvalidInput("rainbow generator needs n >= 2");
      break;
  }
}

namespace {

// Stream item `index` of the mixed random rainbow generator at size n.
RainbowInstance mixed_rainbow_instance(std::size_t n, std::uint64_t seed,
                                       std::uint64_t index) {
  std::mt19937_64 rng(split_seed(split_seed(seed, n), index));
  const std::size_t p = std::uniform_int_distribution<std::size_t>(0, n)(rng);
  const std::uint64_t instance_seed = rng();
  if (index % 2 == 0 && 2 * n - p <= n * (n - 1) / 2) {
    return random_rainbow_instance(n, p, instance_seed, RainbowMode::disjoint);
  }
  return random_rainbow_instance(n, p, instance_seed,
                                 RainbowMode::unconstrained);
}

std::uint64_t space_size(const SuiteConfig& cfg, std::size_t n) {
  switch (cfg.generator) {
    case Generator::labeled: return labeled_count(n);
    case Generator::outmaps: return OutmapSpace(n, cfg.dmin, cfg.dmax).size();
    case Generator::random_rainbow: return cfg.rainbow_count;
  }
  return 0;
}

void run_range(const SuiteConfig& cfg, std::size_t n, std::uint64_t lo,
               std::uint64_t hi, Report& out) {
  switch (cfg.generator) {
    case Generator::labeled:
      for (std::uint64_t i = lo; i < hi; ++i) {
        Digraph d = labeled_digraph(n, i);
        if (passes(d, cfg.filter)) check_digraph(d, i, cfg.checks, out);
      }
      break;
    case Generator::outmaps: {
      OutmapSpace space(n, cfg.dmin, cfg.dmax);
      for (std::uint64_t i = lo; i < hi; ++i) {
        check_digraph(space.at(i), i, cfg.checks, out);
      }
      break;
    }
    case Generator::random_rainbow:
      for (std::uint64_t i = lo; i < hi; ++i) {
        check_rainbow(mixed_rainbow_instance(n, cfg.seed, i), i, cfg.checks,
                      out);
      }
      break;
  }
}

}  // namespace

Report run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  Report total;
  total.config = cfg;
  for (std::size_t n = cfg.n_min; n <= cfg.n_max; ++n) {
    const std::uint64_t size = space_size(cfg, n);
    const std::size_t workers =
        static_cast<std::size_t>(std::min<std::uint64_t>(cfg.workers,
                                                         std::max<std::uint64_t>(size, 1)));
    std::vector<Report> partial(workers);
    for (auto& p : partial) p.config = cfg;
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](std::size_t w) {
      try {
        const std::uint64_t lo = size * w / workers;
        const std::uint64_t hi = size * (w + 1) / workers;
        run_range(cfg, n, lo, hi, partial[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::jthread> threads;
      for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (const auto& p : partial) total.merge(p);
    if (cfg.progress) {
      std::cerr << "n=" << n << ": " << size << " candidates, "
                << total.instances << " instances so far, "
                << total.theorem_violations() << " theorem violations\n";
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Extremal girth / psi search

namespace {

class RatioSearch {
 public:
  RatioSearch(std::size_t n, std::uint64_t budget, std::uint64_t seed)
      : n_(n), budget_(budget), rng_(seed) {
    report_.config.n_min = report_.config.n_max = n;
    report_.config.seed = seed;
    report_.config.checks = {Check::two_psi_strict};
  }

  Report run() {
    if (n_ <= kMaxLabeledVertices && labeled_count(n_) <= budget_) {
      for (std::uint64_t i = 0; i < labeled_count(n_); ++i) {
        Digraph d = labeled_digraph(n_, i);
        if (!d.empty() && is_sinkless(d)) evaluate(d);
      }
      return report_;
    }
    if (n_ < 2) return report_;
    while (report_.evaluations < budget_) climb();
    return report_;
  }

 private:
  using OutSets = std::vector<std::vector<bool>>;

  Digraph build(const OutSets& out) const {
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = 0; v < n_; ++v) {
        if (out[u][v]) arcs.push_back({u, v});
      }
    }
    return Digraph(n_, arcs);
  }

  Rational evaluate(const Digraph& d) {
    const std::uint64_t index = report_.evaluations++;
    check_digraph(d, index, report_.config.checks, report_);
    return Rational(std::int64_t(*oracles::girth_exact(d).girth)) /
           peeling::psi(d);
  }

  std::size_t pick(std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_);
  }

  // Low out-degrees favour long girth, so start sparse.
  OutSets random_start() {
    OutSets out(n_, std::vector<bool>(n_, false));
    for (Vertex u = 0; u < n_; ++u) {
      std::size_t degree = 1 + pick(std::min<std::size_t>(2, n_ - 1));
      while (degree > 0) {
        Vertex v = static_cast<Vertex>(pick(n_));
        if (v == u || out[u][v]) continue;
        out[u][v] = true;
        --degree;
      }
    }
    return out;
  }

  void climb() {
    OutSets current = random_start();
    Rational score = evaluate(build(current));
    std::size_t stale = 0;
    while (report_.evaluations < budget_ && stale < 4 * n_ * n_) {
      OutSets next = current;
      Vertex u = static_cast<Vertex>(pick(n_));
      Vertex v = static_cast<Vertex>(pick(n_ - 1));
      if (v >= u) ++v;
      std::size_t degree = std::count(next[u].begin(), next[u].end(), true);
      if (next[u][v] && degree == 1) {  // would create a sink
        ++stale;
        continue;
      }
      next[u][v] = !next[u][v];
      Rational s = evaluate(build(next));
      if (s >= score) {
        stale = s > score ? 0 : stale + 1;
        current = std::move(next);
        score = std::move(s);
      } else {
        ++stale;
      }
    }
  }

  std::size_t n_;
  std::uint64_t budget_;
  std::mt19937_64 rng_;
  Report report_;
};

}  // namespace

Report extremal_ratio_search(std::size_t n, std::uint64_t budget,
                             std::uint64_t seed) {
  return RatioSearch(n, budget, seed).run();
}

// ---------------------------------------------------------------------------
// JSON

namespace {

std::string_view to_string(Generator g) {
  switch (g) {
    case Generator::labeled: return "labeled";
    case Generator::outmaps: return "outmaps";
    case Generator::random_rainbow: return "random-rainbow";
  }
  return "unknown";
}

std::string_view to_string(LabeledFilter f) {
  switch (f) {
    case LabeledFilter::none: return "none";
    case LabeledFilter::sinkless: return "sinkless";
    case LabeledFilter::strongly_connected: return "strongly-connected";
  }
  return "unknown";
}

ordered_json to_json(const Event& e) {
  return {{"check", std::string(to_string(e.check))},
          {"n", e.n},
          {"index", e.index},
          {"detail", e.detail},
          {"instance", e.instance}};
}

ordered_json events_json(const std::vector<Event>& events) {
  ordered_json out = ordered_json::array();
  for (const Event& e : events) out.push_back(to_json(e));
  return out;
}

}  // namespace

ordered_json to_json(const Report& r) {
  const SuiteConfig& c = r.config;
  ordered_json config = {{"n_min", c.n_min},
                         {"n_max", c.n_max},
                         {"generator", std::string(to_string(c.generator))},
                         {"seed", c.seed}};
  if (c.generator == Generator::labeled) {
    config["filter"] = std::string(to_string(c.filter));
  } else if (c.generator == Generator::outmaps) {
    config["dmin"] = c.dmin;
    config["dmax"] = c.dmax;
  } else {
    config["count_per_n"] = c.rainbow_count;
  }
  ordered_json checks = ordered_json::object();
  for (Check check : c.checks) {
    const CheckTally& t = r.tally(check);
    checks[std::string(to_string(check))] = {
        {"kind", is_conjecture(check) ? "conjecture" : "theorem"},
        {"applicable", t.applicable},
        {"passed", t.passed},
        {"failed", t.failed}};
  }
  ordered_json extremal = ordered_json::object();
  if (r.max_girth_over_psi) {
    const auto& m = *r.max_girth_over_psi;
    extremal["max_girth_over_psi"] = {
        {"ratio", shortcycle::to_json(m.ratio)},
        {"ratio_approx", m.ratio.to_double()},
        {"girth", m.girth},
        {"psi", shortcycle::to_json(m.psi)},
        {"n", m.n},
        {"index", m.index},
        {"instance", m.instance}};
  } else {
    extremal["max_girth_over_psi"] = nullptr;
  }
  extremal["tight_two_phi"] = r.tight_two_phi;
  extremal["union_of_cycles"] = r.union_of_cycles;
  extremal["tight_union_of_cycles"] = r.tight_union_of_cycles;
  extremal["tightness_witness"] =
      r.tightness_witness ? to_json(*r.tightness_witness) : ordered_json(nullptr);

  ordered_json out = {{"config", std::move(config)},
                      {"instances", r.instances},
                      {"theorem_violations", r.theorem_violations()},
                      {"checks", std::move(checks)},
                      {"violations", events_json(r.violations)},
                      {"findings", events_json(r.findings)},
                      {"extremal", std::move(extremal)}};
  if (r.subgraphs_checked) out["subgraphs_checked"] = r.subgraphs_checked;
  if (r.evaluations) out["evaluations"] = r.evaluations;
  return out;
}

}  // namespace shortcycle::harness
