// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every threshold is exact; no tolerances are involved.

#include "dynamo/analysis.hpp"
#include "dynamo/constructions.hpp"
#include "dynamo/dynamics.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace dynamo;

namespace {

int failures = 0;
std::vector<std::string> notes;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    notes.push_back(what);
  }
}

void criterion(int number, const std::string& label, const std::function<void()>& body) {
  const int before = failures;
  notes.clear();
  const auto start = std::chrono::steady_clock::now();
  body();
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  std::printf("[%s] criterion %d: %s (%lld ms)\n", failures == before ? "PASS" : "FAIL", number,
              label.c_str(), static_cast<long long>(ms));
  for (const std::string& n : notes) std::printf("         - %s\n", n.c_str());
}

std::string tag(int d, int r, int n, const char* what) {
  return std::string(what) + " at d=" + std::to_string(d) + " r=" + std::to_string(r) +
         " n=" + std::to_string(n);
}

struct GridEntry {
  int d, r, n;
  ConstructionReport report;
};

// Builders applicable per (d, r, n) of the criterion-1 grid, odd-n builders
// on odd n only. The majority construction joins once per (d, n) as r = 0.
std::vector<GridEntry> criterion1_grid() {
  std::vector<GridEntry> out;
  for (int d : {2, 3}) {
    const std::vector<int> sides = d == 2 ? std::vector<int>{9, 10, 11, 12, 13, 14, 15, 16}
                                          : std::vector<int>{7, 9, 10};
    for (int n : sides) {
      const TorusShape shape = TorusShape::make(n, d);
      for (int r = 2; r <= 2 * d; ++r) {
        if (r > d) {
          out.push_back({d, r, n, build_large_r_monotone(shape, r)});
        } else {
          out.push_back({d, r, n, build_small_r_monotone(shape, r)});
          out.push_back({d, r, n, build_small_r_bp(shape, r)});
          if (n % 2 == 1) out.push_back({d, r, n, build_small_r_reversible_odd(shape, r)});
        }
      }
      out.push_back({d, 0, n, build_majority_dynamo(shape)});
    }
  }
  return out;
}

Rational reference_leading(const GridEntry& e) {
  const bool monotone = e.report.claim == Claim::kMonotoneDynamo;
  return table1_bounds(e.d, e.r, e.n, e.report.model.kind, monotone).lower;
}

Configuration random_config(const TorusShape& shape, std::mt19937_64& rng, double density) {
  Configuration c(shape);
  std::bernoulli_distribution coin(density);
  for (VertexId v = 0; v < shape.vertex_count(); ++v) {
    if (coin(rng)) c.set(v);
  }
  return c;
}

struct Minimum {
  TorusShape shape;
  Rule rule;
  bool monotone;
  std::uint64_t value;
};

std::vector<Minimum> tiny_minima;  // shared between criteria 2, 3 and 6

std::uint64_t searched_min(const TorusShape& shape, const Rule& rule, bool monotone) {
  SearchOptions opts;
  opts.threads = 2;
  const SearchResult r = min_dynamo_search(shape, rule, monotone, opts);
  expect(r.exhaustive, "search unexpectedly non-exhaustive on " + std::to_string(shape.side()) +
                           "^" + std::to_string(shape.dim()));
  tiny_minima.push_back({shape, rule, monotone, r.minimum});
  return r.minimum;
}

}  // namespace

int main() {
  std::vector<GridEntry> grid;

  criterion(1, "construction grid verifies with Table-1 leading terms", [&] {
    grid = criterion1_grid();
    for (const GridEntry& e : grid) {
      const bool monotone = e.report.claim == Claim::kMonotoneDynamo;
      const DynamoCheck check = monotone ? is_monotone_dynamo(e.report.config, e.report.model)
                                         : is_dynamo(e.report.config, e.report.model);
      expect(check.yes(), tag(e.d, e.r, e.n, "claim failed to verify"));
      expect(e.report.config.cardinality() <= e.report.predicted_size_bound,
             tag(e.d, e.r, e.n, "cardinality above the predicted bound"));
      expect(Rational(static_cast<long long>(e.report.predicted_size_bound)) <=
                 e.report.table1_leading + e.report.allowance,
             tag(e.d, e.r, e.n, "predicted bound above leading + allowance"));
      expect(e.report.table1_leading == reference_leading(e),
             tag(e.d, e.r, e.n, "leading term does not match the reference cell"));
    }
  });

  criterion(2, "exact minima on small cycles", [&] {
    for (int n : {4, 5, 6, 7}) {
      const TorusShape c = TorusShape::make(n, 1);
      expect(searched_min(c, Rule::bootstrap(1), false) == 1, "m(C_" + std::to_string(n) + ",1)");
      const std::uint64_t rev = searched_min(c, Rule::reversible(1), false);
      expect(rev == (n % 2 == 1 ? 1u : 2u), "rev m(C_" + std::to_string(n) + ",1)");
      expect(searched_min(c, Rule::reversible(1), true) == 2,
             "monotone rev m(C_" + std::to_string(n) + ",1)");
    }
    for (int n : {4, 5}) {
      const TorusShape c = TorusShape::make(n, 1);
      expect(searched_min(c, Rule::reversible(2), false) == static_cast<std::uint64_t>(n),
             "rev m(C_" + std::to_string(n) + ",2) = n");
    }
  });

  criterion(3, "factor-2 bipartite theorem on exhaustive minima", [&] {
    for (const auto& [n, d] : std::vector<std::pair<int, int>>{{4, 1}, {6, 1}, {4, 2}}) {
      const TorusShape t = TorusShape::make(n, d);
      for (int r = 1; r <= 2 * d; ++r) {
        const std::uint64_t bp = searched_min(t, Rule::bootstrap(r), false);
        const std::uint64_t rev = searched_min(t, Rule::reversible(r), false);
        expect(rev >= 2 * bp, tag(d, r, n, "reversible < 2 * bootstrap"));
      }
    }
  });

  criterion(4, "core criterion agrees with simulation on 1000 seeded configs per case", [&] {
    const std::uint64_t base_seed = 0xd1a0c0de;
    for (const auto& [n, d] : std::vector<std::pair<int, int>>{{6, 2}, {4, 3}}) {
      const TorusShape t = TorusShape::make(n, d);
      for (int r = 1; r <= 2 * d; ++r) {
        std::mt19937_64 rng(base_seed + 100 * d + r);
        int agree = 0;
        for (int i = 0; i < 1000; ++i) {
          const Configuration c = random_config(t, rng, 0.05 + 0.09 * (i % 10));
          const bool by_core = bp_dynamo_by_core(c, r);
          const DynamoCheck sim = is_dynamo(c, Rule::bootstrap(r));
          if (sim.verdict != Tristate::kIndeterminate && by_core == sim.yes()) ++agree;
        }
        expect(agree == 1000, tag(d, r, n, "oracle disagreement"));
      }
    }
  });

  criterion(5, "exact S-structure properties", [&] {
    for (const auto& [d, r, n] :
         std::vector<std::array<int, 3>>{{2, 3, 9}, {2, 3, 12}, {2, 3, 15}, {3, 4, 9}, {3, 5, 9}}) {
      const SStructureReport rep = verify_s_structure(TorusShape::make(n, d), r);
      expect(rep.ok() && rep.internal_checked > 0 && rep.forward_checked > 0,
             tag(d, r, n, "threshold S structure"));
    }
    for (const auto& [d, n] :
         std::vector<std::pair<int, int>>{{2, 9}, {2, 12}, {2, 15}, {3, 9}}) {
      const SStructureReport rep = verify_majority_s_structure(TorusShape::make(n, d));
      expect(rep.ok() && rep.internal_checked > 0 && rep.forward_checked > 0,
             tag(d, 0, n, "majority S structure"));
    }
  });

  criterion(6, "closed-form lower bounds hold for all minima and constructions", [&] {
    for (const Minimum& m : tiny_minima) {
      std::optional<std::uint64_t> bp_min;
      if (m.rule.kind == RuleKind::kReversible && m.shape.side() % 2 == 0) {
        for (const Minimum& other : tiny_minima) {
          if (other.shape == m.shape && other.rule.kind == RuleKind::kBootstrap &&
              other.rule.threshold == m.rule.threshold && !other.monotone) {
            bp_min = other.value;
          }
        }
      }
      const BoundReport rep = check_lower_bounds(m.shape, m.rule, m.monotone, m.value, bp_min);
      expect(rep.all_ok, "searched minimum violates a bound on " +
                             std::to_string(m.shape.side()) + "^" +
                             std::to_string(m.shape.dim()) + " " + m.rule.name());
    }
    for (const GridEntry& e : grid) {
      const bool monotone = e.report.claim == Claim::kMonotoneDynamo;
      const BoundReport rep = check_lower_bounds(e.report.config.shape(), e.report.model, monotone,
                                                 e.report.config.cardinality());
      expect(rep.all_ok, tag(e.d, e.r, e.n, "constructed size violates a bound"));
    }
  });

  criterion(7, "A_0 dichotomy: odd-n dynamo, even-n period-2 cycle", [&] {
    for (const auto& [n, d] : std::vector<std::pair<int, int>>{{5, 2}, {7, 2}, {5, 3}}) {
      const TorusShape t = TorusShape::make(n, d);
      const Configuration a0 = build_a0(t).config;
      for (int r = 1; r <= d; ++r) {
        expect(is_dynamo(a0, Rule::reversible(r)).yes(), tag(d, r, n, "A_0 not a dynamo"));
      }
    }
    for (int n : {4, 6}) {
      const TorusShape t = TorusShape::make(n, 2);
      const RunResult r = run(parity_class(t, 0), Rule::reversible(2));
      expect(r.outcome.verdict == Verdict::kCycle && r.outcome.period == 2,
             tag(2, 2, n, "checkerboard does not blink"));
    }
  });

  criterion(8, "transform contracts on every verified grid dynamo", [&] {
    for (const GridEntry& e : grid) {
      const ConstructionReport& rep = e.report;
      if (rep.claim == Claim::kMonotoneDynamo && rep.model.kind == RuleKind::kReversible) {
        const Configuration halved = halve_monotone(rep.config);
        const std::uint64_t border_overlap =
            (rep.config & border_set(rep.config.shape(), 1)).cardinality();
        expect(2 * halved.cardinality() <= rep.config.cardinality() + 2 * border_overlap,
               tag(e.d, e.r, e.n, "halved size above |W|/2 + |W n border|"));
        expect(bp_closure(halved, rep.model.threshold).is_all(),
               tag(e.d, e.r, e.n, "halved configuration is not a bootstrap dynamo"));
      }
      if (rep.model.kind == RuleKind::kReversible &&
          rep.model.threshold <= 2 * e.d - 1) {
        const auto [big, padded] = pad_embed(rep.config);
        expect(is_dynamo(padded, rep.model).yes(),
               tag(e.d, e.r, e.n, "padded configuration is not a dynamo"));
      }
    }
  });

  if (failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d failing check(s)\n", failures);
  return 1;
}
