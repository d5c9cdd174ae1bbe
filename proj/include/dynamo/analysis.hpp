#pragma once

// Closed-form bound values, k-core refutation, and exhaustive minimum-dynamo
// search for desk-scale instances.

#include "dynamo/dynamics.hpp"
#include "dynamo/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dynamo {

struct BoundsRecord {
  int d = 0;
  int r = 0;  // 0 for the majority model
  int n = 0;
  RuleKind model = RuleKind::kBootstrap;
  bool monotone = false;
  Rational lower;  // leading term; lower and upper agree at leading order
  Rational upper;
  std::string source;
};

// Exact leading-term value of the minimum (monotone) dynamo size for the
// requested cell. r is ignored for the majority model.
BoundsRecord table1_bounds(int d, int r, int n, RuleKind model, bool monotone);

// Maximal subset of `set` whose induced subgraph has minimum degree >= k.
VertexSet k_core(const VertexSet& set, int k);

// r-BP dynamo iff the (2d-r+1)-core of the inactive set is empty.
bool bp_dynamo_by_core(const Configuration& config, int r);

struct SearchOptions {
  std::uint64_t budget = std::uint64_t{1} << 22;  // candidate configurations examined
  bool prune_translations = false;  // enumerate only sets containing vertex 0
  int threads = 1;
  int max_rounds = 0;  // 0 = generous internal default
};

struct SearchResult {
  std::uint64_t minimum;
  Configuration witness;
  std::uint64_t examined;
  bool exhaustive;
};

// Enumerates candidate sets by increasing cardinality, so the first success
// is the minimum. Budget exhaustion downgrades to a best-known upper bound
// (all-active fallback) with exhaustive = false.
SearchResult min_dynamo_search(const TorusShape& shape, const Rule& rule, bool monotone_required,
                               SearchOptions opts = {});

std::uint64_t search_cell_cap();  // largest vertex count the search enumerates

struct BoundCheck {
  std::string name;
  Rational bound;
  std::uint64_t required = 0;  // ceil(bound), clamped at 0
  bool satisfied = false;
};

struct BoundReport {
  std::vector<BoundCheck> checks;
  bool all_ok = true;
};

// Applies every applicable closed-form lower bound to an observed minimum or
// constructed size: monotone reversible >= 2(1 - d/r) n^d, monotone majority
// >= (1 - d/(d+2)) n^d, and for even n reversible >= 2 * (bootstrap minimum)
// when that minimum is supplied.
BoundReport check_lower_bounds(const TorusShape& shape, const Rule& rule, bool monotone,
                               std::uint64_t observed_minimum,
                               std::optional<std::uint64_t> bp_minimum = std::nullopt);

}  // namespace dynamo
