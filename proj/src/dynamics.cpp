#include "dynamo/dynamics.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace dynamo {

void Rule::validate(const TorusShape& shape) const {
  if (kind == RuleKind::kMajority) return;
  if (threshold < 1 || threshold > shape.degree()) {
    throw std::invalid_argument("threshold r must lie in [1, 2d]");
  }
}

std::string Rule::name() const {
  switch (kind) {
    case RuleKind::kBootstrap:
      return "bp(" + std::to_string(threshold) + ")";
    case RuleKind::kReversible:
      return "rbp(" + std::to_string(threshold) + ")";
    case RuleKind::kMajority:
      return "maj";
  }
  return "?";
}

int default_max_rounds(const TorusShape& shape) {
  return 4 * shape.dim() * shape.side() + 16;
}

Configuration step(const Configuration& config, const Rule& rule) {
  const TorusShape& shape = config.shape();
  rule.validate(shape);
  const int d = shape.dim();
  Configuration next(shape);
  for (VertexId v = 0; v < shape.vertex_count(); ++v) {
    int active = 0;
    for (int axis = 0; axis < d; ++axis) {
      active += config.test(shape.step_up(v, axis));
      active += config.test(shape.step_down(v, axis));
    }
    bool on = false;
    switch (rule.kind) {
      case RuleKind::kBootstrap:
        on = config.test(v) || active >= rule.threshold;
        break;
      case RuleKind::kReversible:
        on = active >= rule.threshold;
        break;
      case RuleKind::kMajority:
        on = active > d || (active == d && config.test(v));
        break;
    }
    if (on) next.set(v);
  }
  return next;
}

RunResult run(const Configuration& initial, const Rule& rule, RunOptions opts) {
  const TorusShape& shape = initial.shape();
  rule.validate(shape);
  const int budget = opts.max_rounds > 0 ? opts.max_rounds : default_max_rounds(shape);

  RunResult result;
  if (opts.record_trace) result.trace.push_back(initial);

  Configuration prev2(shape);
  Configuration prev1 = initial;
  bool have_prev2 = false;

  if (initial.is_all()) {
    result.outcome = {Verdict::kPercolated, 0, 0, 0, true};
    return result;
  }

  bool monotone = true;
  for (int t = 1; t <= budget; ++t) {
    Configuration cur = step(prev1, rule);
    if (opts.record_trace) result.trace.push_back(cur);
    monotone = monotone && prev1.is_subset_of(cur);
    if (cur.is_all()) {
      result.outcome = {Verdict::kPercolated, t, 0, t, monotone};
      return result;
    }
    if (cur == prev1) {
      result.outcome = {Verdict::kCycle, t - 1, 1, t, monotone};
      return result;
    }
    if (have_prev2 && cur == prev2) {
      result.outcome = {Verdict::kCycle, t - 2, 2, t, monotone};
      return result;
    }
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
    have_prev2 = true;
  }
  result.outcome = {Verdict::kBudgetExhausted, 0, 0, budget, monotone};
  return result;
}

DynamoCheck is_dynamo(const Configuration& config, const Rule& rule, int max_rounds) {
  RunResult r = run(config, rule, {max_rounds, false});
  DynamoCheck check{Tristate::kIndeterminate, r.outcome};
  switch (r.outcome.verdict) {
    case Verdict::kPercolated:
      check.verdict = Tristate::kYes;
      break;
    case Verdict::kCycle:
      check.verdict = Tristate::kNo;
      break;
    case Verdict::kBudgetExhausted:
      check.verdict = Tristate::kIndeterminate;
      break;
  }
  return check;
}

DynamoCheck is_monotone_dynamo(const Configuration& config, const Rule& rule, int max_rounds) {
  DynamoCheck check = is_dynamo(config, rule, max_rounds);
  if (check.verdict == Tristate::kYes && !check.certificate.monotone) {
    check.verdict = Tristate::kNo;
  }
  return check;
}

bool is_stable_set(const VertexSet& set, const Rule& rule) {
  rule.validate(set.shape());
  if (rule.kind == RuleKind::kBootstrap) return true;
  const int need = rule.kind == RuleKind::kMajority ? set.shape().dim() : rule.threshold;
  bool ok = true;
  set.for_each([&](VertexId v) {
    if (ok && members_among_neighbors(set, v) < need) ok = false;
  });
  return ok;
}

Configuration bp_closure(const Configuration& config, int r) {
  const TorusShape& shape = config.shape();
  Rule::bootstrap(r).validate(shape);
  Configuration state = config;
  std::vector<int> active_neighbors(shape.vertex_count(), 0);
  std::deque<VertexId> queue;

  for (VertexId v = 0; v < shape.vertex_count(); ++v) {
    if (state.test(v)) continue;
    const int count = members_among_neighbors(state, v);
    active_neighbors[v] = count;
    if (count >= r) queue.push_back(v);
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    if (state.test(v)) continue;
    state.set(v);
    for (int axis = 0; axis < shape.dim(); ++axis) {
      for (VertexId u : {shape.step_up(v, axis), shape.step_down(v, axis)}) {
        if (!state.test(u) && ++active_neighbors[u] == r) queue.push_back(u);
      }
    }
  }
  return state;
}

std::optional<CycleInfo> find_cycle_bruteforce(const Configuration& config, const Rule& rule,
                                               int max_rounds) {
  std::map<std::vector<std::uint64_t>, int> seen;
  Configuration cur = config;
  seen[cur.blocks()] = 0;
  for (int t = 1; t <= max_rounds; ++t) {
    cur = step(cur, rule);
    auto [it, inserted] = seen.emplace(cur.blocks(), t);
    if (!inserted) return CycleInfo{it->second, t - it->second};
  }
  return std::nullopt;
}

}  // namespace dynamo
