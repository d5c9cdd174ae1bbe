// Command-line front end: construct, simulate, verify, search, table, render.
//
// Exit codes: 0 success / property verified, 1 property refuted,
// 2 usage or parse error, 3 indeterminate (round budget exhausted).

#include "dynamo/analysis.hpp"
#include "dynamo/config_io.hpp"
#include "dynamo/constructions.hpp"
#include "dynamo/dynamics.hpp"
#include "dynamo/rational.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace dynamo;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIndeterminate = 3;

std::uint64_t cell_budget() {
  if (const char* env = std::getenv("DYNAMO_LAB_MAX_CELLS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "warning: ignoring unparsable DYNAMO_LAB_MAX_CELLS\n";
  }
  return default_cell_budget();
}

Rule parse_rule(const std::string& model, int r) {
  if (model == "bp") return Rule::bootstrap(r);
  if (model == "rbp") return Rule::reversible(r);
  if (model == "maj") return Rule::majority();
  throw CLI::ValidationError("--model", "expected one of bp, rbp, maj");
}

std::string coord_list(const Configuration& config) {
  std::ostringstream out;
  bool first = true;
  config.for_each([&](VertexId v) {
    if (!first) out << ",";
    first = false;
    out << "(";
    const Coord c = config.shape().coords_of(v);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out << ",";
      out << c[i];
    }
    out << ")";
  });
  return out.str();
}

std::string claim_name(Claim claim) {
  switch (claim) {
    case Claim::kDynamo: return "dynamo";
    case Claim::kMonotoneDynamo: return "monotone-dynamo";
    case Claim::kA0Activator: return "a0-activator";
  }
  return "?";
}

const std::vector<std::string> kConstructionTokens = {
    "large-r", "small-r-monotone", "small-r-bp", "small-r-rev-odd", "a0", "majority"};

struct CommonArgs {
  int n = 0;
  int d = 0;
  int r = 0;
  std::string model = "rbp";
  std::string construction;
  std::string seed_file;
  std::string out;
  int max_rounds = 0;
  std::uint64_t budget = std::uint64_t{1} << 22;
  bool monotone = false;
  bool prune = false;
  int threads = 1;
  std::string trace;
};

int cmd_construct(const CommonArgs& a) {
  const TorusShape shape = TorusShape::make(a.n, a.d, cell_budget());
  const auto build = [&]() -> std::optional<ConstructionReport> {
    if (a.construction == "large-r") return build_large_r_monotone(shape, a.r);
    if (a.construction == "small-r-monotone") return build_small_r_monotone(shape, a.r);
    if (a.construction == "small-r-bp") return build_small_r_bp(shape, a.r);
    if (a.construction == "small-r-rev-odd") return build_small_r_reversible_odd(shape, a.r);
    if (a.construction == "a0") return build_a0(shape);
    if (a.construction == "majority") return build_majority_dynamo(shape);
    return std::nullopt;
  };
  const std::optional<ConstructionReport> maybe = build();
  if (!maybe) {
    std::ostringstream msg;
    msg << "unknown construction '" << a.construction << "'; valid tokens:";
    for (const auto& t : kConstructionTokens) msg << " " << t;
    std::cerr << msg.str() << "\n";
    return kExitUsage;
  }
  const ConstructionReport& report = *maybe;

  std::string out = a.out;
  if (out.empty()) {
    std::ostringstream name;
    name << a.construction << "_d" << a.d << "_n" << a.n;
    if (a.r > 0) name << "_r" << a.r;
    name << ".cfg";
    out = name.str();
  }
  write_configuration_file(out, report.config);
  std::cout << "construction=" << a.construction << " model=" << report.model.name()
            << " claim=" << claim_name(report.claim) << " size=" << report.config.cardinality()
            << " bound=" << report.predicted_size_bound
            << " table1=" << to_string(report.table1_leading) << " out=" << out << "\n";
  return kExitOk;
}

int cmd_simulate(const CommonArgs& a) {
  const Configuration initial = read_configuration_file(a.seed_file, cell_budget());
  const Rule rule = parse_rule(a.model, a.r);
  RunOptions opts{a.max_rounds, !a.trace.empty()};
  const RunResult result = run(initial, rule, opts);

  if (!a.trace.empty()) {
    std::ofstream index(a.trace + "_index.txt");
    for (std::size_t t = 0; t < result.trace.size(); ++t) {
      std::ostringstream frame;
      frame << a.trace << "_t" << t << ".cfg";
      write_configuration_file(frame.str(), result.trace[t]);
      index << t << " " << frame.str() << "\n";
    }
  }

  const Outcome& o = result.outcome;
  switch (o.verdict) {
    case Verdict::kPercolated:
      std::cout << "verdict=percolated round=" << o.round << " rounds_run=" << o.rounds_run
                << " monotone=" << (o.monotone ? "true" : "false") << "\n";
      break;
    case Verdict::kCycle:
      std::cout << "verdict=cycle entry=" << o.round << " period=" << o.period
                << " rounds_run=" << o.rounds_run
                << " monotone=" << (o.monotone ? "true" : "false") << "\n";
      break;
    case Verdict::kBudgetExhausted:
      std::cout << "verdict=budget-exhausted rounds_run=" << o.rounds_run << "\n";
      return kExitIndeterminate;
  }
  return kExitOk;
}

int cmd_verify(const CommonArgs& a) {
  const Configuration initial = read_configuration_file(a.seed_file, cell_budget());
  const Rule rule = parse_rule(a.model, a.r);
  const DynamoCheck check = a.monotone ? is_monotone_dynamo(initial, rule, a.max_rounds)
                                       : is_dynamo(initial, rule, a.max_rounds);
  const Outcome& o = check.certificate;
  switch (check.verdict) {
    case Tristate::kYes:
      std::cout << "verified: percolated at t=" << o.round << "\n";
      return kExitOk;
    case Tristate::kNo:
      if (o.verdict == Verdict::kCycle) {
        std::cout << "refuted: cycle of period " << o.period << " at t=" << o.round << "\n";
      } else {
        std::cout << "refuted: percolated at t=" << o.round
                  << " but a vertex was deactivated on the way\n";
      }
      return kExitRefuted;
    case Tristate::kIndeterminate:
      std::cout << "indeterminate: no verdict within " << o.rounds_run << " rounds\n";
      return kExitIndeterminate;
  }
  return kExitIndeterminate;
}

int cmd_search(const CommonArgs& a) {
  const TorusShape shape = TorusShape::make(a.n, a.d, cell_budget());
  if (shape.vertex_count() > search_cell_cap()) {
    std::cerr << "search is capped at " << search_cell_cap() << " cells; got "
              << shape.vertex_count() << "\n";
    return kExitUsage;
  }
  const Rule rule = parse_rule(a.model, a.r);
  SearchOptions opts;
  opts.budget = a.budget;
  opts.prune_translations = a.prune;
  opts.threads = a.threads;
  opts.max_rounds = a.max_rounds;
  const SearchResult result = min_dynamo_search(shape, rule, a.monotone, opts);
  std::cout << "min=" << result.minimum << " examined=" << result.examined
            << " exhaustive=" << (result.exhaustive ? "true" : "false")
            << " witness=" << coord_list(result.witness) << "\n";
  if (!a.out.empty()) write_configuration_file(a.out, result.witness);
  return kExitOk;
}

struct TableRange {
  int r_from = 1;
  int r_to = 0;
  int n_from = 0;
  int n_to = -1;
};

int cmd_table(const CommonArgs& a, const TableRange& range, std::ostream& out) {
  out << "d,r,n,model,monotone,lower,constructed,upper,verified\n";
  const int r_lo = a.model == "maj" ? 0 : range.r_from;
  const int r_hi = a.model == "maj" ? 0 : range.r_to;
  for (int r = r_lo; r <= r_hi; ++r) {
    for (int n = range.n_from; n <= range.n_to; ++n) {
      const RuleKind kind = a.model == "bp"    ? RuleKind::kBootstrap
                            : a.model == "rbp" ? RuleKind::kReversible
                                               : RuleKind::kMajority;
      std::string constructed = "";
      std::string verified;
      Rational leading;
      try {
        const BoundsRecord rec = table1_bounds(a.d, r, n, kind, a.monotone);
        leading = rec.lower;
      } catch (const std::exception& e) {
        out << a.d << "," << (a.model == "maj" ? "-" : std::to_string(r)) << "," << n << ","
            << a.model << "," << (a.monotone ? "true" : "false") << ",,,," << "skip(" << e.what()
            << ")\n";
        continue;
      }
      try {
        const TorusShape shape = TorusShape::make(n, a.d, cell_budget());
        std::optional<ConstructionReport> report;
        std::optional<Configuration> derived;  // constructions reached via a transform
        if (kind == RuleKind::kReversible) {
          if (r > a.d) {
            report = build_large_r_monotone(shape, r);
          } else if (a.monotone) {
            report = build_small_r_monotone(shape, r);
          } else {
            report = n % 2 == 1 ? build_small_r_reversible_odd(shape, r)
                                : build_small_r_monotone(shape, r);
          }
        } else if (kind == RuleKind::kBootstrap) {
          if (r <= a.d) {
            report = build_small_r_bp(shape, r);
          } else {
            derived = halve_monotone(build_large_r_monotone(shape, r).config);
          }
        } else {
          if (a.monotone) {
            report = build_majority_dynamo(shape);
          } else {
            out << a.d << ",-," << n << ",maj,false," << to_string(leading) << ",,"
                << to_string(leading) << ",skip(no in-scope construction)\n";
            continue;
          }
        }
        Configuration config = report ? report->config : *derived;
        constructed = std::to_string(config.cardinality());
        const Rule rule = kind == RuleKind::kBootstrap    ? Rule::bootstrap(r)
                          : kind == RuleKind::kReversible ? Rule::reversible(r)
                                                          : Rule::majority();
        const DynamoCheck check = a.monotone && kind != RuleKind::kBootstrap
                                      ? is_monotone_dynamo(config, rule, a.max_rounds)
                                      : is_dynamo(config, rule, a.max_rounds);
        verified = check.verdict == Tristate::kYes    ? "true"
                   : check.verdict == Tristate::kNo   ? "false"
                                                      : "indeterminate";
      } catch (const std::exception& e) {
        verified = std::string("skip(") + e.what() + ")";
      }
      out << a.d << "," << (a.model == "maj" ? "-" : std::to_string(r)) << "," << n << ","
          << a.model << "," << (a.monotone ? "true" : "false") << "," << to_string(leading) << ","
          << constructed << "," << to_string(leading) << "," << verified << "\n";
    }
  }
  return kExitOk;
}

int cmd_render(const CommonArgs& a) {
  const Configuration initial = read_configuration_file(a.seed_file, cell_budget());
  if (initial.shape().dim() != 2) {
    std::cerr << "render requires d = 2\n";
    return kExitUsage;
  }
  const Rule rule = parse_rule(a.model, a.r);
  const RunResult result = run(initial, rule, {a.max_rounds, true});

  std::size_t last = result.trace.size() - 1;
  if (result.outcome.verdict == Verdict::kCycle) {
    // One frame per distinct cycle state, none for the detected repeat.
    last = static_cast<std::size_t>(result.outcome.round + result.outcome.period - 1);
  }
  std::ofstream index(a.out + "_index.txt");
  char name[32];
  for (std::size_t t = 0; t <= last; ++t) {
    std::snprintf(name, sizeof(name), "_%04zu.pgm", t);
    write_pgm_file(a.out + name, result.trace[t]);
    index << t << " " << a.out + name << "\n";
  }
  switch (result.outcome.verdict) {
    case Verdict::kPercolated:
      std::cout << "percolated at t=" << result.outcome.round << "; wrote " << last + 1
                << " frames\n";
      break;
    case Verdict::kCycle:
      std::cout << "cycle of period " << result.outcome.period << " at t=" << result.outcome.round
                << "; wrote " << last + 1 << " frames\n";
      break;
    case Verdict::kBudgetExhausted:
      std::cout << "budget exhausted after " << result.outcome.rounds_run << " rounds; wrote "
                << last + 1 << " frames\n";
      return kExitIndeterminate;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dynamo-lab: construct, simulate, and verify (reversible) bootstrap\n"
               "percolation and majority dynamos on the d-dimensional torus"};
  app.require_subcommand(1);

  CommonArgs a;
  TableRange range;

  auto* construct = app.add_subcommand("construct", "build a named configuration");
  construct->add_option("--n", a.n, "side length")->required();
  construct->add_option("--d", a.d, "dimension")->required();
  construct->add_option("--r", a.r, "threshold r");
  construct->add_option("--model", a.model, "bp | rbp | maj (informational)");
  construct->add_option("--construction", a.construction, "builder token")->required();
  construct->add_option("--out", a.out, "output configuration path");

  auto* simulate = app.add_subcommand("simulate", "run a process from a configuration file");
  simulate->add_option("--seed-file", a.seed_file, "configuration file")->required();
  simulate->add_option("--model", a.model, "bp | rbp | maj")->required();
  simulate->add_option("--r", a.r, "threshold r");
  simulate->add_option("--max-rounds", a.max_rounds, "round budget (default 4dn+16)");
  simulate->add_option("--trace", a.trace, "prefix for per-round configuration dumps");

  auto* verify = app.add_subcommand("verify", "check the dynamo property");
  verify->add_option("--seed-file", a.seed_file, "configuration file")->required();
  verify->add_option("--model", a.model, "bp | rbp | maj")->required();
  verify->add_option("--r", a.r, "threshold r");
  verify->add_flag("--monotone", a.monotone, "require a monotone dynamo");
  verify->add_option("--max-rounds", a.max_rounds, "round budget (default 4dn+16)");

  auto* search = app.add_subcommand("search", "exhaustive minimum dynamo search");
  search->add_option("--n", a.n, "side length")->required();
  search->add_option("--d", a.d, "dimension")->required();
  search->add_option("--r", a.r, "threshold r");
  search->add_option("--model", a.model, "bp | rbp | maj")->required();
  search->add_flag("--monotone", a.monotone, "restrict to monotone dynamos");
  search->add_option("--budget", a.budget, "max candidate configurations (default 2^22)");
  search->add_flag("--prune", a.prune, "fix the least active vertex at the origin");
  search->add_option("--threads", a.threads, "worker threads (default 1)");
  search->add_option("--max-rounds", a.max_rounds, "per-candidate round cap");
  search->add_option("--out", a.out, "write the witness configuration here");

  auto* table = app.add_subcommand("table", "emit reference-vs-constructed CSV rows");
  table->add_option("--d", a.d, "dimension")->required();
  table->add_option("--model", a.model, "bp | rbp | maj")->required();
  table->add_flag("--monotone", a.monotone, "monotone column");
  table->add_option("--r-from", range.r_from, "first threshold");
  table->add_option("--r-to", range.r_to, "last threshold");
  table->add_option("--n-from", range.n_from, "first side length");
  table->add_option("--n-to", range.n_to, "last side length");
  table->add_option("--max-rounds", a.max_rounds, "verifier round budget");
  table->add_option("--out", a.out, "CSV path (default stdout)");

  auto* render = app.add_subcommand("render", "write one PGM frame per round (d = 2)");
  render->add_option("--seed-file", a.seed_file, "configuration file")->required();
  render->add_option("--model", a.model, "bp | rbp | maj")->required();
  render->add_option("--r", a.r, "threshold r");
  render->add_option("--max-rounds", a.max_rounds, "round budget (default 4dn+16)");
  render->add_option("--out", a.out, "output prefix")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(a);
    if (simulate->parsed()) return cmd_simulate(a);
    if (verify->parsed()) return cmd_verify(a);
    if (search->parsed()) return cmd_search(a);
    if (render->parsed()) return cmd_render(a);
    if (table->parsed()) {
      if (a.out.empty()) return cmd_table(a, range, std::cout);
      std::ofstream out(a.out);
      if (!out) {
        std::cerr << "cannot open " << a.out << "\n";
        return kExitUsage;
      }
      return cmd_table(a, range, out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
