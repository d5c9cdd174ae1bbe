#include "dynamo/analysis.hpp"

#include <atomic>
#include <bit>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace dynamo {

BoundsRecord table1_bounds(int d, int r, int n, RuleKind model, bool monotone) {
  if (d < 1 || n < 3) throw std::invalid_argument("bounds require d >= 1 and n >= 3");
  BoundsRecord rec{d, model == RuleKind::kMajority ? 0 : r, n, model, monotone,
                   Rational(0), Rational(0), ""};
  const Rational cells(ipow(n, d));
  switch (model) {
    case RuleKind::kBootstrap: {
      if (r < 1 || r > 2 * d) throw std::invalid_argument("bounds require 1 <= r <= 2d");
      if (r <= d) {
        rec.lower = Rational(binomial(d, r - 1), r) * Rational(ipow(n, r - 1));
        rec.source = "bp small r: (1/r) C(d,r-1) n^(r-1)";
      } else {
        rec.lower = (Rational(1) - Rational(d, r)) * cells;
        rec.source = "bp large r: (1-d/r) n^d";
      }
      break;
    }
    case RuleKind::kReversible: {
      if (r < 1 || r > 2 * d) throw std::invalid_argument("bounds require 1 <= r <= 2d");
      if (r <= d) {
        if (monotone) {
          rec.lower = Rational(2 * binomial(d, r - 1), r) * Rational(ipow(n, r - 1));
          rec.source = "reversible small r, monotone: (2/r) C(d,r-1) n^(r-1)";
        } else {
          const int i = n % 2 == 0 ? 1 : 0;
          rec.lower = Rational((1 + i) * binomial(d, r - 1), r) * Rational(ipow(n, r - 1));
          rec.source = "reversible small r: ((1+i)/r) C(d,r-1) n^(r-1), i=1 iff n even";
        }
      } else {
        rec.lower = Rational(2) * (Rational(1) - Rational(d, r)) * cells;
        rec.source = "reversible large r: 2(1-d/r) n^d";
      }
      break;
    }
    case RuleKind::kMajority: {
      if (monotone) {
        rec.lower = (Rational(1) - Rational(d, d + 2)) * cells;
        rec.source = "majority, monotone: (1-d/(d+2)) n^d";
      } else {
        rec.lower = (Rational(1) - Rational(d, d + 1)) * cells;
        rec.source = "majority: (1-d/(d+1)) n^d";
      }
      break;
    }
  }
  rec.upper = rec.lower;
  return rec;
}

VertexSet k_core(const VertexSet& set, int k) {
  if (k < 0) throw std::invalid_argument("k-core requires k >= 0");
  const TorusShape& shape = set.shape();
  VertexSet core = set;
  std::vector<int> degree(shape.vertex_count(), 0);
  std::deque<VertexId> doomed;
  core.for_each([&](VertexId v) {
    degree[v] = members_among_neighbors(core, v);
    if (degree[v] < k) doomed.push_back(v);
  });
  while (!doomed.empty()) {
    const VertexId v = doomed.front();
    doomed.pop_front();
    if (!core.test(v)) continue;
    core.set(v, false);
    for (int axis = 0; axis < shape.dim(); ++axis) {
      for (VertexId u : {shape.step_up(v, axis), shape.step_down(v, axis)}) {
        if (core.test(u) && degree[u]-- == k) doomed.push_back(u);
      }
    }
  }
  return core;
}

bool bp_dynamo_by_core(const Configuration& config, int r) {
  Rule::bootstrap(r).validate(config.shape());
  const int guard = config.shape().degree() - r + 1;
  return k_core(config.complement(), guard).none();
}

std::uint64_t search_cell_cap() { return 64; }

namespace {

// Mask-based simulator for shapes with at most 64 vertices; exhaustive search
// lives entirely in this regime.
struct MaskSim {
  int cells = 0;
  int d = 0;
  int threshold = 0;
  RuleKind kind = RuleKind::kBootstrap;
  bool monotone_required = false;
  int rounds_cap = 0;
  std::uint64_t full = 0;
  std::vector<std::uint64_t> nbr;

  MaskSim(const TorusShape& shape, const Rule& rule, bool monotone, int max_rounds) {
    cells = static_cast<int>(shape.vertex_count());
    d = shape.dim();
    threshold = rule.threshold;
    kind = rule.kind;
    monotone_required = monotone;
    // Synchronous threshold automata settle into period <= 2 after a short
    // transient; this cap is far beyond anything observed at this scale.
    rounds_cap = max_rounds > 0 ? max_rounds
                                : std::max(default_max_rounds(shape), cells * (d + 2) + 64);
    full = cells == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cells) - 1;
    nbr.resize(cells, 0);
    for (VertexId v = 0; v < shape.vertex_count(); ++v) {
      for (int axis = 0; axis < d; ++axis) {
        nbr[v] |= std::uint64_t{1} << shape.step_up(v, axis);
        nbr[v] |= std::uint64_t{1} << shape.step_down(v, axis);
      }
    }
  }

  std::uint64_t apply(std::uint64_t state) const {
    std::uint64_t next = 0;
    for (int v = 0; v < cells; ++v) {
      const int active = std::popcount(state & nbr[v]);
      bool on = false;
      switch (kind) {
        case RuleKind::kBootstrap:
          on = ((state >> v) & 1) || active >= threshold;
          break;
        case RuleKind::kReversible:
          on = active >= threshold;
          break;
        case RuleKind::kMajority:
          on = active > d || (active == d && ((state >> v) & 1));
          break;
      }
      if (on) next |= std::uint64_t{1} << v;
    }
    return next;
  }

  // Returns true iff the candidate percolates (and monotonically so, when
  // required). Sets *budget_hit when the cap fires before a verdict.
  bool percolates(std::uint64_t state, bool* budget_hit) const {
    if (kind == RuleKind::kBootstrap) {
      while (true) {
        if (state == full) return true;
        const std::uint64_t next = apply(state);
        if (next == state) return false;
        state = next;
      }
    }
    std::uint64_t prev2 = 0;
    bool have_prev2 = false;
    bool monotone = true;
    for (int t = 0; t < rounds_cap; ++t) {
      if (state == full) return !monotone_required || monotone;
      const std::uint64_t next = apply(state);
      monotone = monotone && (state & ~next) == 0;
      if (monotone_required && !monotone) return false;
      if (next == state) return next == full;
      if (have_prev2 && next == prev2) return false;
      prev2 = state;
      have_prev2 = true;
      state = next;
    }
    *budget_hit = true;
    return false;
  }
};

// Lexicographic combination enumeration of `card` elements with a fixed
// first element; visit returns false to stop early.
template <class Visit>
void enumerate_with_first(int first, int card, int cells, Visit&& visit) {
  std::vector<int> idx(card);
  idx[0] = first;
  for (int i = 1; i < card; ++i) idx[i] = first + i;
  if (idx.back() >= cells) return;
  while (true) {
    std::uint64_t mask = 0;
    for (int i : idx) mask |= std::uint64_t{1} << i;
    if (!visit(mask)) return;
    int i = card - 1;
    while (i >= 1 && idx[i] == cells - card + i) --i;  // idx[i] at its maximum
    if (i < 1) return;  // the first element stays fixed
    ++idx[i];
    for (int j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

SearchResult min_dynamo_search(const TorusShape& shape, const Rule& rule, bool monotone_required,
                               SearchOptions opts) {
  rule.validate(shape);
  if (shape.vertex_count() > search_cell_cap()) {
    throw std::invalid_argument("exhaustive search is capped at " +
                                std::to_string(search_cell_cap()) + " cells");
  }
  const int cells = static_cast<int>(shape.vertex_count());
  const MaskSim sim(shape, rule, monotone_required, opts.max_rounds);
  const int workers = std::max(1, opts.threads);

  std::atomic<std::uint64_t> examined{0};
  std::atomic<bool> found{false};
  std::atomic<bool> out_of_budget{false};
  std::atomic<bool> indeterminate_seen{false};
  std::mutex witness_mutex;
  std::uint64_t witness_mask = 0;

  const auto shard_run = [&](int card, int first_lo, int first_hi, int stride_count, int offset) {
    // Pruned search fixes vertex 0 as a member: every configuration has a
    // translate through the origin and dynamo-ness is translation invariant.
    for (int first = first_lo + offset; first <= first_hi; first += stride_count) {
      if (found.load(std::memory_order_relaxed) || out_of_budget.load(std::memory_order_relaxed)) {
        return;
      }
      enumerate_with_first(first, card, cells, [&](std::uint64_t mask) {
        if (found.load(std::memory_order_relaxed)) return false;
        if (examined.fetch_add(1, std::memory_order_relaxed) >= opts.budget) {
          out_of_budget.store(true, std::memory_order_relaxed);
          return false;
        }
        bool budget_hit = false;
        if (sim.percolates(mask, &budget_hit)) {
          std::lock_guard<std::mutex> lock(witness_mutex);
          if (!found.load()) {
            witness_mask = mask;
            found.store(true);
          }
          return false;
        }
        if (budget_hit) indeterminate_seen.store(true, std::memory_order_relaxed);
        return true;
      });
    }
  };

  SearchResult result{0, Configuration(shape), 0, false};
  for (int card = 1; card <= cells; ++card) {
    const int first_hi = opts.prune_translations ? 0 : cells - card;
    if (workers == 1 || first_hi == 0) {
      shard_run(card, 0, first_hi, 1, 0);
    } else {
      std::vector<std::thread> pool;
      const int lanes = std::min(workers, first_hi + 1);
      pool.reserve(lanes);
      for (int w = 0; w < lanes; ++w) {
        pool.emplace_back(shard_run, card, 0, first_hi, lanes, w);
      }
      for (auto& t : pool) t.join();
    }
    if (found.load()) {
      result.minimum = card;
      for (int v = 0; v < cells; ++v) {
        if ((witness_mask >> v) & 1) result.witness.set(static_cast<VertexId>(v));
      }
      result.examined = examined.load();
      // Smaller cardinalities were fully enumerated, so the first success is
      // the exact minimum unless an undecided candidate was skipped earlier.
      result.exhaustive = !indeterminate_seen.load();
      return result;
    }
    if (out_of_budget.load()) break;
  }

  // All-active percolates for every valid rule, so a completed enumeration
  // always ends in the found-branch; reaching here means the budget fired.
  // Fall back to the all-active upper bound.
  result.examined = examined.load();
  result.exhaustive = false;
  result.minimum = cells;
  result.witness = Configuration::all(shape);
  return result;
}

BoundReport check_lower_bounds(const TorusShape& shape, const Rule& rule, bool monotone,
                               std::uint64_t observed_minimum,
                               std::optional<std::uint64_t> bp_minimum) {
  const int d = shape.dim();
  const Rational cells(static_cast<long long>(shape.vertex_count()));
  BoundReport report;

  const auto add = [&](const std::string& name, const Rational& bound) {
    BoundCheck check{name, bound, 0, false};
    check.required = bound > Rational(0) ? static_cast<std::uint64_t>(ceil_of(bound)) : 0;
    check.satisfied = observed_minimum >= check.required;
    report.all_ok = report.all_ok && check.satisfied;
    report.checks.push_back(check);
  };

  if (rule.kind == RuleKind::kReversible && monotone) {
    // Delta-regular bound with Delta = 2d: 2(1 - Delta/2r)|G| = 2(1 - d/r)|G|.
    add("monotone reversible >= 2(1-d/r)|G|",
        Rational(2) * (Rational(1) - Rational(d, rule.threshold)) * cells);
  }
  if (rule.kind == RuleKind::kMajority && monotone) {
    add("monotone majority >= (1-d/(d+2))|G|", (Rational(1) - Rational(d, d + 2)) * cells);
  }
  if (rule.kind == RuleKind::kReversible && shape.side() % 2 == 0 && bp_minimum.has_value()) {
    add("bipartite: reversible >= 2 * bootstrap minimum",
        Rational(2 * static_cast<long long>(*bp_minimum)));
  }
  return report;
}

}  // namespace dynamo
