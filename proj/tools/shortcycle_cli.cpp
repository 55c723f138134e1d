// Command-line front end: exact girth, peeling, rainbow cycles, two-cycle
// search, exhaustive verification suites and the girth/psi ratio search.
//
// Exit status: 0 success, 1 theorem violation or invalid certificate,
// 2 input or usage error, 3 resource cap.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "shortcycle/error.hpp"
#include "shortcycle/harness.hpp"
#include "shortcycle/io.hpp"
#include "shortcycle/oracles.hpp"
#include "shortcycle/peeling.hpp"
#include "shortcycle/rainbow.hpp"

namespace {

using nlohmann::ordered_json;
using namespace shortcycle;

enum ExitStatus : int {
  kSuccess = 0,
  kViolation = 1,
  kInputError = 2,
  kResourceCap = 3,
};

struct CertificateRejected : Error {
  using Error::Error;
};

void emit(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

ordered_json infinite() { return "inf"; }

int cmd_girth(const std::string& file) {
  Digraph d = parse_digraph(read_file(file));
  auto result = oracles::girth_exact(d);
  if (!result.girth) {
    emit({{"girth", infinite()}});
    return kSuccess;
  }
  if (!validate_cycle(d, *result.witness)) {
    throw CertificateRejected("girth witness failed validation");
  }
  emit({{"girth", *result.girth}, {"certificate", to_json(*result.witness)}});
  return kSuccess;
}

int cmd_peel(const std::string& file) {
  Digraph d = parse_digraph(read_file(file));
  auto trace = peeling::peel(d);
  auto cert = peeling::short_cycle_from_trace(trace);
  if (!validate_cycle(d, cert)) {
    throw CertificateRejected("peeling certificate failed validation");
  }
  ordered_json steps = ordered_json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"removed", s.removed}, {"phi_after", to_json(s.phi_after)}});
  }
  ordered_json arcs = ordered_json::array();
  for (const Arc& a : trace.terminal.arcs()) {
    arcs.push_back({trace.terminal_vertices[a.from],
                    trace.terminal_vertices[a.to]});
  }
  emit({{"trace",
         {{"phi_initial", to_json(trace.phi_initial)},
          {"steps", std::move(steps)},
          {"terminal",
           {{"vertices", trace.terminal_vertices}, {"arcs", std::move(arcs)}}}}},
        {"certificate", to_json(cert)}});
  return kSuccess;
}

int cmd_rainbow(const std::string& file, bool oracle) {
  RainbowInstance inst = parse_rainbow(read_file(file));
  if (oracle) {
    auto exact = oracles::shortest_rainbow_cycle_exact(inst);
    if (!exact.length) {
      emit({{"rg", infinite()}});
      return kSuccess;
    }
    if (!validate_rainbow_cycle(inst, *exact.witness)) {
      throw CertificateRejected("oracle certificate failed validation");
    }
    emit({{"rg", *exact.length}, {"certificate", to_json(*exact.witness)}});
    return kSuccess;
  }
  auto cert = rainbow::find_rainbow_cycle(inst);
  if (!validate_rainbow_cycle(inst, cert)) {
    throw CertificateRejected("rainbow certificate failed validation");
  }
  emit({{"n", inst.vertex_count()},
        {"p", inst.singleton_count()},
        {"certificate", to_json(cert)}});
  return kSuccess;
}

int cmd_two_cycles(const std::string& file) {
  Digraph d = parse_digraph(read_file(file));
  auto pair = oracles::two_cycles_min_intersection(d);
  if (!is_directed_cycle(d, pair.first) || !is_directed_cycle(d, pair.second)) {
    throw CertificateRejected("two-cycle witness failed validation");
  }
  ordered_json out = {{"first", pair.first},
                      {"second", pair.second},
                      {"intersection", pair.intersection},
                      {"p", pair.out_degree_one},
                      {"bound", pair.out_degree_one + 1},
                      {"same_cycle", pair.same_cycle},
                      {"in_hypothesis", pair.in_hypothesis}};
  if (pair.in_hypothesis) {
    out["short_cycle"] = to_json(oracles::deg2_short_cycle(d));
  }
  emit(out);
  return kSuccess;
}

harness::SuiteConfig parse_generator(const std::string& spec,
                                     harness::SuiteConfig cfg) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = spec.find(':', start);
    parts.push_back(spec.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  auto number = [&](const std::string& s) -> std::size_t {
    try {
      std::size_t used = 0;
      auto v = std::stoull(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw InvalidInput("bad number '" + s + "' in generator " + spec);
    }
  };
  if (parts[0] == "labeled") {
    cfg.generator = harness::Generator::labeled;
    cfg.filter = harness::LabeledFilter::sinkless;
    if (parts.size() == 2) {
      if (parts[1] == "none") cfg.filter = harness::LabeledFilter::none;
      else if (parts[1] == "sinkless") cfg.filter = harness::LabeledFilter::sinkless;
      else if (parts[1] == "strong") cfg.filter = harness::LabeledFilter::strongly_connected;
      else throw InvalidInput("unknown labeled filter " + parts[1]);
    } else if (parts.size() > 2) {
      throw InvalidInput("expected labeled[:none|sinkless|strong]");
    }
  } else if (parts[0] == "outmaps") {
    cfg.generator = harness::Generator::outmaps;
    if (parts.size() == 3) {
      cfg.dmin = number(parts[1]);
      cfg.dmax = number(parts[2]);
    } else if (parts.size() != 1) {
      throw InvalidInput("expected outmaps[:dmin:dmax]");
    }
  } else if (parts[0] == "rainbow") {
    cfg.generator = harness::Generator::random_rainbow;
    if (parts.size() == 2) cfg.rainbow_count = number(parts[1]);
    else if (parts.size() != 1) throw InvalidInput("expected rainbow[:count]");
  } else {
    throw InvalidInput("unknown generator " + parts[0]);
  }
  return cfg;
}

std::vector<harness::Check> default_checks(harness::Generator g) {
  using harness::Check;
  switch (g) {
    case harness::Generator::labeled:
      return {Check::two_phi, Check::two_psi_strict, Check::chc,
              Check::eq1_identity};
    case harness::Generator::outmaps:
      return {Check::two_cycles, Check::deg2_girth};
    case harness::Generator::random_rainbow:
      return {Check::rainbow_bound, Check::rd_claim};
  }
  return {};
}

int report_status(const harness::Report& r) {
  emit(harness::to_json(r));
  return r.theorem_violations() == 0 ? kSuccess : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified short directed and rainbow cycles"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json"}));

  std::string file;
  auto* girth = app.add_subcommand("girth", "Exact girth with a witness cycle");
  girth->add_option("file", file, "Digraph file")->required();

  auto* peel = app.add_subcommand(
      "peel", "Peel a sink-less digraph; cycle certified by 2*phi");
  peel->add_option("file", file, "Digraph file")->required();

  bool oracle = false;
  auto* rainbow_cmd = app.add_subcommand(
      "rainbow", "Rainbow cycle of length <= ceil((n+p)/2)");
  rainbow_cmd->add_option("file", file, "Rainbow instance file")->required();
  rainbow_cmd->add_flag("--oracle", oracle, "Exact shortest rainbow cycle");

  auto* two_cycles = app.add_subcommand(
      "two-cycles", "Two cycles with minimum common vertices");
  two_cycles->add_option("file", file, "Digraph file")->required();

  std::size_t n_max = 4;
  std::size_t n_min = 0;
  std::string generator = "labeled";
  std::string checks;
  std::size_t jobs = 1;
  std::uint64_t seed = 1;
  bool progress = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--n", n_max, "Largest vertex count");
  verify->add_option("--n-min", n_min, "Smallest vertex count");
  verify->add_option("--generator", generator,
                     "labeled[:none|sinkless|strong] | outmaps[:dmin:dmax] | "
                     "rainbow[:count]");
  verify->add_option("--checks", checks, "Comma-separated check names");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Random seed");
  verify->add_flag("--progress", progress, "Progress lines on stderr");

  std::uint64_t budget = 10000;
  auto* search = app.add_subcommand("search-ratio",
                                    "Search for large girth / psi");
  search->add_option("--n", n_max, "Vertex count")->required();
  search->add_option("--budget", budget, "Evaluations");
  search->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*girth) return cmd_girth(file);
    if (*peel) return cmd_peel(file);
    if (*rainbow_cmd) return cmd_rainbow(file, oracle);
    if (*two_cycles) return cmd_two_cycles(file);
    if (*verify) {
      harness::SuiteConfig cfg;
      cfg = parse_generator(generator, cfg);
      cfg.n_max = n_max;
      cfg.n_min = n_min != 0 ? n_min
                  : cfg.generator == harness::Generator::random_rainbow ? 2
                                                                        : 1;
      cfg.workers = jobs;
      cfg.seed = seed;
      cfg.progress = progress;
      if (checks.empty()) {
        cfg.checks = default_checks(cfg.generator);
      } else {
        std::size_t start = 0;
        while (start <= checks.size()) {
          auto pos = checks.find(',', start);
          std::string name = checks.substr(start, pos - start);
          auto c = harness::check_from_string(name);
          if (!c) throw InvalidInput("unknown check " + name);
          cfg.checks.push_back(*c);
          if (pos == std::string::npos) break;
          start = pos + 1;
        }
      }
      return report_status(harness::run_suite(cfg));
    }
    if (*search) {
      return report_status(harness::extremal_ratio_search(n_max, budget, seed));
    }
  } catch (const SinkPresent& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ResourceCap& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const TheoremViolation& e) {
    std::cerr << "COUNTEREXAMPLE OR BUG: " << e.what() << '\n';
    return kViolation;
  } catch (const CertificateRejected& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
