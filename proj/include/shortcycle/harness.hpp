#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "shortcycle/digraph.hpp"
#include "shortcycle/rainbow_instance.hpp"
#include "shortcycle/rational.hpp"

namespace shortcycle::harness {

inline constexpr std::size_t kMaxLabeledVertices = 5;
inline constexpr std::size_t kMaxOutmapVertices = 7;
inline constexpr std::size_t kMaxRainbowVertices = 12;

enum class Check {
  two_phi,          // girth <= 2 phi, peeling certificate valid
  two_psi_strict,   // girth < 2 psi
  chc,              // girth <= ceil(n / min out-degree)     (conjecture)
  two_cycles,       // two cycles meeting in <= p + 1 vertices
  deg2_girth,       // girth <= ceil((n + p) / 2) for out-degrees in {1, 2}
  rainbow_bound,    // constructive rainbow cycle <= ceil((n + p) / 2)
  rd_claim,         // rainbow diameter of every H built
  eq1_identity,     // both sides of the removability inequality sum to phi
  rchc,             // rainbow girth <= ceil(n / 2) for sizes <= 2 (conjecture)
};

inline constexpr std::array kAllChecks = {
    Check::two_phi,       Check::two_psi_strict, Check::chc,
    Check::two_cycles,    Check::deg2_girth,     Check::rainbow_bound,
    Check::rd_claim,      Check::eq1_identity,   Check::rchc};

std::string_view to_string(Check c);
std::optional<Check> check_from_string(std::string_view s);
// Conjecture checks report findings; they never fail a run.
bool is_conjecture(Check c);

enum class LabeledFilter { none, sinkless, strongly_connected };

// All 2^(n(n-1)) labelled simple digraphs on n <= 5 vertices; digraph i has
// arc k present iff bit k of i is set, arcs ordered lexicographically.
std::uint64_t labeled_count(std::size_t n);
Digraph labeled_digraph(std::size_t n, std::uint64_t index);
bool passes(const Digraph& d, LabeledFilter filter);
bool is_strongly_connected(const Digraph& d);

void enumerate_digraphs(std::size_t n, LabeledFilter filter,
                        const std::function<void(const Digraph&)>& visit);

// Every vertex independently picks an out-neighbourhood of size in
// [dmin, dmax]; (sum_d C(n-1, d))^n digraphs in mixed-radix order.
class OutmapSpace {
 public:
  OutmapSpace(std::size_t n, std::size_t dmin, std::size_t dmax);
  std::uint64_t size() const { return size_; }
  Digraph at(std::uint64_t index) const;

 private:
  std::size_t n_;
  std::vector<std::vector<Vertex>> choices_;  // shared by all vertices
  std::uint64_t size_ = 1;
};

void enumerate_outmaps(std::size_t n, std::size_t dmin, std::size_t dmax,
                       const std::function<void(const Digraph&)>& visit);

enum class RainbowMode { disjoint, unconstrained };

// n families on n vertices, exactly p of size 1, reproducible from seed.
// Disjoint mode draws 2n - p distinct edges and throws Infeasible when
// K_n has fewer.
RainbowInstance random_rainbow_instance(std::size_t n, std::size_t p,
                                        std::uint64_t seed, RainbowMode mode);

// Seed for item `index` of a stream seeded with `seed`.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index);

enum class Generator { labeled, outmaps, random_rainbow };

struct SuiteConfig {
  std::size_t n_min = 1;
  std::size_t n_max = 4;
  Generator generator = Generator::labeled;
  LabeledFilter filter = LabeledFilter::none;
  std::size_t dmin = 1;
  std::size_t dmax = 2;
  std::size_t rainbow_count = 100;  // instances per n
  std::uint64_t seed = 1;
  std::vector<Check> checks;
  std::size_t workers = 1;
  bool progress = false;
  std::size_t max_recorded = 20;  // violations/findings kept per report
};

// Throws CapExceeded when the n range exceeds the generator's cap and
// InvalidInput on an inconsistent configuration.
void validate(const SuiteConfig& cfg);

struct CheckTally {
  std::uint64_t applicable = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
};

struct Event {
  Check check;
  std::size_t n = 0;
  std::uint64_t index = 0;
  std::string instance;  // text format
  std::string detail;
};

struct RatioRecord {
  Rational ratio;  // girth / psi
  std::size_t girth = 0;
  Rational psi;
  std::size_t n = 0;
  std::uint64_t index = 0;
  std::string instance;
};

struct Report {
  SuiteConfig config;
  std::uint64_t instances = 0;
  std::array<CheckTally, kAllChecks.size()> tallies{};
  // Theorem-check failures. Only the first `max_recorded` (by n, index)
  // are kept; tallies hold the full counts.
  std::vector<Event> violations;
  // Conjecture-check failures.
  std::vector<Event> findings;
  std::optional<RatioRecord> max_girth_over_psi;
  std::uint64_t tight_two_phi = 0;  // girth == 2 phi
  std::uint64_t union_of_cycles = 0;
  std::uint64_t tight_union_of_cycles = 0;
  std::optional<Event> tightness_witness;
  std::uint64_t subgraphs_checked = 0;
  std::uint64_t evaluations = 0;  // ratio search only

  CheckTally& tally(Check c) { return tallies[static_cast<std::size_t>(c)]; }
  const CheckTally& tally(Check c) const {
    return tallies[static_cast<std::size_t>(c)];
  }
  std::uint64_t theorem_violations() const;
  // Commutative, associative; ties resolved by (n, index).
  void merge(const Report& other);
};

Report run_suite(const SuiteConfig& cfg);

// Per-instance check drivers, also used directly by tests.
void check_digraph(const Digraph& d, std::uint64_t index,
                   std::span<const Check> checks, Report& report);
void check_rainbow(const RainbowInstance& inst, std::uint64_t index,
                   std::span<const Check> checks, Report& report);

// Maximises girth / psi over sink-less digraphs on n vertices within
// `budget` evaluations: exhaustive when 2^(n(n-1)) <= budget, otherwise
// random restarts with arc-flip hill climbing. Every evaluated instance
// must satisfy girth / psi < 2.
Report extremal_ratio_search(std::size_t n, std::uint64_t budget,
                             std::uint64_t seed);

nlohmann::ordered_json to_json(const Report& r);

}  // namespace shortcycle::harness
