#pragma once

// Synchronous update engine for the three rules, percolation / monotonicity /
// stability verification, cycle detection, and a worklist closure for
// irreversible bootstrap percolation.

#include "dynamo/torus.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dynamo {

enum class RuleKind { kBootstrap, kReversible, kMajority };

struct Rule {
  RuleKind kind = RuleKind::kBootstrap;
  int threshold = 1;  // r; ignored by the majority rule

  static Rule bootstrap(int r) { return {RuleKind::kBootstrap, r}; }
  static Rule reversible(int r) { return {RuleKind::kReversible, r}; }
  static Rule majority() { return {RuleKind::kMajority, 0}; }

  void validate(const TorusShape& shape) const;  // threshold in [1, 2d]
  std::string name() const;                      // "bp(3)", "rbp(2)", "maj"
};

using Configuration = VertexSet;

enum class Verdict { kPercolated, kCycle, kBudgetExhausted };

struct Outcome {
  Verdict verdict = Verdict::kBudgetExhausted;
  int round = 0;       // percolation round, or first round of the cycle
  int period = 0;      // 1 or 2 when verdict == kCycle
  int rounds_run = 0;  // number of executed steps
  bool monotone = true;  // w^(t+1) >= w^(t) held for every executed step
};

// 4*d*n + 16: every construction in scope activates within O(d*n) rounds.
int default_max_rounds(const TorusShape& shape);

// One synchronous round. Bootstrap keeps active vertices and activates on
// >= r active neighbors; reversible activates exactly on >= r; majority
// activates on > d, with a tie (= d on the 2d-regular torus) keeping the
// current state.
Configuration step(const Configuration& config, const Rule& rule);

struct RunOptions {
  int max_rounds = 0;  // 0 = default_max_rounds(shape)
  bool record_trace = false;
};

struct RunResult {
  Outcome outcome;
  std::vector<Configuration> trace;  // rounds 0..rounds_run when recorded
};

// Iterates step until all-active, until w^(t+2) == w^(t) (period <= 2 is the
// eventual behavior of synchronous symmetric threshold automata), or until
// the budget runs out.
RunResult run(const Configuration& initial, const Rule& rule, RunOptions opts = {});

enum class Tristate { kNo, kYes, kIndeterminate };

struct DynamoCheck {
  Tristate verdict = Tristate::kIndeterminate;
  Outcome certificate;
  bool yes() const { return verdict == Tristate::kYes; }
};

DynamoCheck is_dynamo(const Configuration& config, const Rule& rule, int max_rounds = 0);
DynamoCheck is_monotone_dynamo(const Configuration& config, const Rule& rule, int max_rounds = 0);

// Bootstrap: always. Reversible: every member has >= r neighbors in the set.
// Majority: every member has >= d neighbors in the set.
bool is_stable_set(const VertexSet& set, const Rule& rule);

// Fixed point of bootstrap percolation from config, via a FIFO worklist
// (confluent, so order is irrelevant). Equals the limit of iterated step.
Configuration bp_closure(const Configuration& config, int r);

// Debug-mode detector: exact first-repeat lookup over all visited
// configurations. Used by tests to cross-check the two-step stopper.
struct CycleInfo {
  int entry = 0;
  int period = 0;
};
std::optional<CycleInfo> find_cycle_bruteforce(const Configuration& config, const Rule& rule,
                                               int max_rounds);

}  // namespace dynamo
