#pragma once

// Explicit dynamo constructions and configuration transforms, each returning
// the configuration together with its predicted size bound for verification.

#include "dynamo/dynamics.hpp"
#include "dynamo/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace dynamo {

enum class Claim { kDynamo, kMonotoneDynamo, kA0Activator };

struct ConstructionReport {
  Configuration config;
  std::uint64_t predicted_size_bound = 0;  // exact sum of the parts (union only shrinks)
  Claim claim = Claim::kDynamo;
  Rule model;
  Rational table1_leading;  // leading term of the matching reference cell
  Rational allowance;       // declared lower-order slack; size <= leading + allowance
};

// Residue-class membership behind the explicit S sets: S = { x : f(x) mod m
// in [band_lo, band_hi] } with f(x) = sum_i coeffs[i-1] * x_i.
struct ResidueFamily {
  std::vector<long long> coeffs;
  long long modulus = 1;
  long long band_lo = 0;
  long long band_hi = 0;

  bool contains(const TorusShape& shape, VertexId v) const;

  // A +-1 coordinate step acts as +-coeff on f(x) mod m except across the
  // 1 <-> n wrap, which distorts the residue walk unless m divides n.
  bool exact_everywhere(const TorusShape& shape) const;
  bool seam_free(const TorusShape& shape, VertexId v) const;
};

ResidueFamily s_threshold_family(int d, int r);  // d+1 <= r <= 2d-1
ResidueFamily majority_s_family(int d);

// S for large r: internal degree exactly r, r-d forward neighbors off S u H.
VertexSet build_s_threshold(const TorusShape& shape, int r);

// S for the majority model: internal degree exactly d, one forward neighbor.
VertexSet majority_s_set(const TorusShape& shape);

// H u S, a monotone dynamo under reversible r-BP for d+1 <= r <= 2d
// (all-active when r = 2d).
ConstructionReport build_large_r_monotone(const TorusShape& shape, int r);

// One large-r pattern per sub-torus T(k); monotone dynamo under reversible
// r-BP for 1 <= r <= d (two adjacent vertices when r = 1).
ConstructionReport build_small_r_monotone(const TorusShape& shape, int r);

// Halved per-sub-torus patterns; dynamo under r-BP for 1 <= r <= d.
ConstructionReport build_small_r_bp(const TorusShape& shape, int r);

// Per-sub-torus parity activators; dynamo under reversible r-BP on odd n.
ConstructionReport build_small_r_reversible_odd(const TorusShape& shape, int r);

// The parity class A_0; dynamo under reversible r-BP for every r <= d (odd n).
ConstructionReport build_a0(const TorusShape& shape);

// S u H for the majority model; monotone dynamo.
ConstructionReport build_majority_dynamo(const TorusShape& shape);

// Keep the lighter parity class of the actives, zero the other (even n).
// Turns a reversible r-BP dynamo into an r-BP dynamo.
Configuration halve_bipartite(const Configuration& config);

// (W n A_i) u (W n width-1 border) for the lighter class i. Turns a monotone
// reversible r-BP dynamo W into an r-BP dynamo.
Configuration halve_monotone(const Configuration& config);

// (W n A_i) u width-2 border for the lighter class i. From a reversible r-BP
// dynamo, the output makes one parity class fully active at some round.
// r = 2d is accepted with the trivially-satisfied round-0 contract.
Configuration to_a0_activator(const Configuration& config, int r);

// Copy config into [1,n]^d of T_{n+3}^d and activate the whole shell.
std::pair<TorusShape, Configuration> pad_embed(const Configuration& config);

// Place a T_n^{d-|k|} configuration into the sub-torus fixing axes k to 1;
// the remaining axes, in ascending order, carry the sub coordinates.
Configuration embed_in_sub_torus(const TorusShape& big, const std::vector<int>& fixed_axes,
                                 const Configuration& sub);

// Exhaustive structural verification of an S family. Exact neighbor counts
// are checked on seam-free vertices (on every vertex when the modulus
// divides n); stability of S u H is checked everywhere.
struct SStructureReport {
  std::uint64_t internal_checked = 0;
  std::uint64_t internal_violations = 0;
  std::uint64_t forward_checked = 0;
  std::uint64_t forward_violations = 0;
  std::uint64_t stability_violations = 0;

  bool ok() const {
    return internal_violations == 0 && forward_violations == 0 && stability_violations == 0;
  }
};

SStructureReport verify_s_structure(const TorusShape& shape, int r);
SStructureReport verify_majority_s_structure(const TorusShape& shape);

// First round at which one parity class is fully active, scanning both
// classes every round; nullopt if a cycle or the budget hits first.
struct ParityFill {
  int round = 0;
  int parity = 0;
};
std::optional<ParityFill> first_full_parity_round(const Configuration& config, const Rule& rule,
                                                  int max_rounds = 0);

}  // namespace dynamo
