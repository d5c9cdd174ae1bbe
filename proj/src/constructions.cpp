#include "dynamo/constructions.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace dynamo {

namespace {

Coord all_ones(int d) { return Coord(d, 1); }

void require(bool cond, const std::string& message) {
  if (!cond) throw std::invalid_argument(message);
}

// Free axes (0-based) left open by a 1-based fixed-axis tuple.
std::vector<int> free_axes(int d, const std::vector<int>& fixed_axes) {
  std::vector<bool> fixed(d, false);
  for (int axis : fixed_axes) fixed[axis - 1] = true;
  std::vector<int> out;
  for (int axis = 0; axis < d; ++axis) {
    if (!fixed[axis]) out.push_back(axis);
  }
  return out;
}

int lighter_parity(const Configuration& config) {
  const VertexSet a0 = parity_class(config.shape(), 0);
  const std::uint64_t in_a0 = (config & a0).cardinality();
  return 2 * in_a0 <= config.cardinality() ? 0 : 1;
}

Rational rational_pow(int n, int exp) { return Rational(exp < 0 ? 0 : ipow(n, exp)); }

}  // namespace

bool ResidueFamily::contains(const TorusShape& shape, VertexId v) const {
  long long f = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    f += coeffs[i] * shape.coordinate(v, static_cast<int>(i));
  }
  f %= modulus;
  return f >= band_lo && f <= band_hi;
}

bool ResidueFamily::exact_everywhere(const TorusShape& shape) const {
  return shape.side() % modulus == 0;
}

bool ResidueFamily::seam_free(const TorusShape& shape, VertexId v) const {
  if (exact_everywhere(shape)) return true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    const int x = shape.coordinate(v, static_cast<int>(i));
    if (x == 1 || x == shape.side()) return false;
  }
  return true;
}

ResidueFamily s_threshold_family(int d, int r) {
  require(r >= d + 1 && r <= 2 * d - 1, "S requires d+1 <= r <= 2d-1");
  ResidueFamily fam;
  if (r % 2 == 0) {
    // f(x) = x_1 + 2 x_2 + ... + (r/2 - 1) x_{r/2-1} mod r/2, band {1..r-d}
    fam.modulus = r / 2;
    for (int i = 1; i <= r / 2 - 1; ++i) fam.coeffs.push_back(i);
    fam.band_lo = 1;
    fam.band_hi = r - d;
  } else {
    // f(x) = 2 x_1 + 4 x_2 + ... + (r-1) x_{(r-1)/2} mod r, band {1..2(r-d)}
    fam.modulus = r;
    for (int i = 1; i <= (r - 1) / 2; ++i) fam.coeffs.push_back(2 * i);
    fam.band_lo = 1;
    fam.band_hi = 2 * (r - d);
  }
  return fam;
}

ResidueFamily majority_s_family(int d) {
  ResidueFamily fam;
  if (d % 2 == 0) {
    // f(x) = x_1 + 2 x_2 + ... + (d/2) x_{d/2} mod (d+2)/2, band {1}
    fam.modulus = (d + 2) / 2;
    for (int i = 1; i <= d / 2; ++i) fam.coeffs.push_back(i);
    fam.band_lo = 1;
    fam.band_hi = 1;
  } else {
    // f(x) = 2 x_1 + 4 x_2 + ... + (d+1) x_{(d+1)/2} mod (d+2), band {1,2}
    fam.modulus = d + 2;
    for (int i = 1; i <= (d + 1) / 2; ++i) fam.coeffs.push_back(2 * i);
    fam.band_lo = 1;
    fam.band_hi = 2;
  }
  return fam;
}

namespace {

VertexSet family_members(const TorusShape& shape, const ResidueFamily& fam) {
  VertexSet out(shape);
  for (VertexId v = 0; v < shape.vertex_count(); ++v) {
    if (fam.contains(shape, v)) out.set(v);
  }
  return out;
}

}  // namespace

VertexSet build_s_threshold(const TorusShape& shape, int r) {
  require(shape.side() >= 5, "S requires n >= 5");
  return family_members(shape, s_threshold_family(shape.dim(), r));
}

VertexSet majority_s_set(const TorusShape& shape) {
  require(shape.side() >= 5, "majority S requires n >= 5");
  return family_members(shape, majority_s_family(shape.dim()));
}

ConstructionReport build_large_r_monotone(const TorusShape& shape, int r) {
  const int d = shape.dim();
  const int n = shape.side();
  require(r >= d + 1 && r <= 2 * d, "large-r construction requires d+1 <= r <= 2d");
  require(n >= 5, "large-r construction requires n >= 5");

  ConstructionReport report{Configuration(shape),
                            0,
                            Claim::kMonotoneDynamo,
                            Rule::reversible(r),
                            Rational(2) * (Rational(1) - Rational(d, r)) * rational_pow(n, d),
                            Rational(2 * d + 1) * rational_pow(n, d - 1)};
  if (r == 2 * d) {
    // The only dynamo at the top threshold is the all-active configuration.
    report.config = Configuration::all(shape);
    report.predicted_size_bound = shape.vertex_count();
    return report;
  }
  const VertexSet s = build_s_threshold(shape, r);
  const VertexSet h = build_h(shape);
  report.config = s | h;
  report.predicted_size_bound = s.cardinality() + h.cardinality();
  return report;
}

Configuration embed_in_sub_torus(const TorusShape& big, const std::vector<int>& fixed_axes,
                                 const Configuration& sub) {
  const std::vector<int> open = free_axes(big.dim(), fixed_axes);
  require(static_cast<int>(open.size()) == sub.shape().dim(),
          "sub configuration dimension does not match the free axes");
  require(sub.shape().side() == big.side(), "sub configuration side length mismatch");
  Configuration out(big);
  sub.for_each([&](VertexId v) {
    std::uint64_t target = 0;  // fixed axes sit at coordinate 1, contributing 0
    for (std::size_t i = 0; i < open.size(); ++i) {
      const int value = sub.shape().coordinate(v, static_cast<int>(i));
      target += static_cast<std::uint64_t>(value - 1) * big.stride(open[i]);
    }
    out.set(static_cast<VertexId>(target));
  });
  return out;
}

namespace {

// Shared scaffold for the three small-r builders: a per-sub-torus pattern is
// produced from the (r-1)-dimensional large-r construction and copied into
// every T(k), k in K(r).
ConstructionReport assemble_small_r(const TorusShape& shape, int r, Claim claim, const Rule& model,
                                    const Rational& per_copy_leading, const Rational& per_copy_allowance,
                                    const std::function<Configuration(const TorusShape&)>& make_copy) {
  const int d = shape.dim();
  const int n = shape.side();
  const long long copies = binomial(d, r - 1);

  ConstructionReport report{Configuration(shape), 0, claim, model,
                            Rational(copies) * per_copy_leading,
                            Rational(copies) * per_copy_allowance};
  const TorusShape sub_shape = TorusShape::make(n, r - 1);
  const Configuration pattern = make_copy(sub_shape);
  for (const auto& k : index_family(d, r)) {
    report.config |= embed_in_sub_torus(shape, k, pattern);
  }
  report.predicted_size_bound = static_cast<std::uint64_t>(copies) * pattern.cardinality();
  return report;
}

}  // namespace

ConstructionReport build_small_r_monotone(const TorusShape& shape, int r) {
  const int d = shape.dim();
  const int n = shape.side();
  require(r >= 1 && r <= d, "small-r construction requires 1 <= r <= d");
  require(n >= 5, "small-r construction requires n >= 5");

  if (r == 1) {
    // Two adjacent active vertices support each other and spread.
    ConstructionReport report{Configuration(shape), 2, Claim::kMonotoneDynamo, Rule::reversible(1),
                              Rational(2), Rational(0)};
    report.config.set(shape.vertex_index(all_ones(d)));
    Coord second = all_ones(d);
    second[0] = 2;
    report.config.set(shape.vertex_index(second));
    return report;
  }
  return assemble_small_r(
      shape, r, Claim::kMonotoneDynamo, Rule::reversible(r),
      Rational(2, r) * rational_pow(n, r - 1), Rational(2 * r - 1) * rational_pow(n, r - 2),
      [r](const TorusShape& sub) { return build_large_r_monotone(sub, r).config; });
}

ConstructionReport build_small_r_bp(const TorusShape& shape, int r) {
  const int d = shape.dim();
  const int n = shape.side();
  require(r >= 1 && r <= d, "small-r construction requires 1 <= r <= d");
  require(n >= 5, "small-r construction requires n >= 5");

  if (r == 1) {
    ConstructionReport report{Configuration(shape), 1, Claim::kDynamo, Rule::bootstrap(1),
                              Rational(1), Rational(0)};
    report.config.set(shape.vertex_index(all_ones(d)));
    return report;
  }
  return assemble_small_r(
      shape, r, Claim::kDynamo, Rule::bootstrap(r), Rational(1, r) * rational_pow(n, r - 1),
      Rational(4 * r - 3, 2) * rational_pow(n, r - 2),
      [r](const TorusShape& sub) { return halve_monotone(build_large_r_monotone(sub, r).config); });
}

ConstructionReport build_small_r_reversible_odd(const TorusShape& shape, int r) {
  const int d = shape.dim();
  const int n = shape.side();
  require(n % 2 == 1, "odd-n construction requires odd n");
  require(r >= 1 && r <= d, "odd-n construction requires 1 <= r <= d");
  require(n >= 7, "odd-n construction requires n >= 7");

  if (r == 1) {
    // A lone vertex splits into two fronts that wrap and meet as an adjacent
    // pair after floor(n/2) rounds.
    ConstructionReport report{Configuration(shape), 1, Claim::kDynamo, Rule::reversible(1),
                              Rational(1), Rational(0)};
    report.config.set(shape.vertex_index(all_ones(d)));
    return report;
  }
  return assemble_small_r(
      shape, r, Claim::kDynamo, Rule::reversible(r), Rational(1, r) * rational_pow(n, r - 1),
      Rational(6 * r - 5, 2) * rational_pow(n, r - 2), [r](const TorusShape& sub) {
        if (r == 2) {
          // The activator degenerates on a 1-dimensional sub-torus: no proper
          // subset of a line is stable under threshold 2, so the halved class
          // erodes from the wrap seam. The odd parity class of the line keeps
          // every copy in phase, meets the other lines at the shared spine
          // vertex, and carries the adjacent wrap pair {n, 1}; the union
          // percolates (verified by simulation across the supported range).
          return parity_class(sub, 1);
        }
        return to_a0_activator(build_large_r_monotone(sub, r).config, r);
      });
}

ConstructionReport build_a0(const TorusShape& shape) {
  require(shape.side() % 2 == 1, "A_0 blinks forever on even n; odd n required");
  ConstructionReport report{parity_class(shape, 0), 0, Claim::kDynamo,
                            Rule::reversible(shape.dim()), Rational(0), Rational(0)};
  report.predicted_size_bound = report.config.cardinality();
  report.table1_leading = Rational(static_cast<long long>(report.predicted_size_bound));
  return report;
}

ConstructionReport build_majority_dynamo(const TorusShape& shape) {
  const int d = shape.dim();
  const int n = shape.side();
  require(n >= 5, "majority construction requires n >= 5");

  const VertexSet s = majority_s_set(shape);
  const VertexSet h = build_h(shape);
  ConstructionReport report{s | h,
                            s.cardinality() + h.cardinality(),
                            Claim::kMonotoneDynamo,
                            Rule::majority(),
                            (Rational(1) - Rational(d, d + 2)) * rational_pow(n, d),
                            Rational(2 * d + 1) * rational_pow(n, d - 1)};
  return report;
}

Configuration halve_bipartite(const Configuration& config) {
  require(config.shape().side() % 2 == 0, "bipartite halving requires even n");
  return config & parity_class(config.shape(), lighter_parity(config));
}

Configuration halve_monotone(const Configuration& config) {
  const TorusShape& shape = config.shape();
  const VertexSet keep = parity_class(shape, lighter_parity(config));
  return (config & keep) | (config & border_set(shape, 1));
}

Configuration to_a0_activator(const Configuration& config, int r) {
  const TorusShape& shape = config.shape();
  const int d = shape.dim();
  // r = 2d is the degenerate case: the kept class is already fully active at
  // round 0, which satisfies the contract outright.
  require(r >= d + 1 && r <= 2 * d, "activator requires d+1 <= r <= 2d");
  const VertexSet keep = parity_class(shape, lighter_parity(config));
  return (config & keep) | border_set(shape, 2);
}

std::pair<TorusShape, Configuration> pad_embed(const Configuration& config) {
  const TorusShape& small = config.shape();
  const int n = small.side();
  const int d = small.dim();
  const TorusShape big = TorusShape::make(n + 3, d);
  Configuration out(big);
  for (VertexId v = 0; v < big.vertex_count(); ++v) {
    bool inside = true;
    for (int axis = 0; axis < d; ++axis) {
      if (big.coordinate(v, axis) > n) {
        inside = false;
        break;
      }
    }
    if (!inside) {
      out.set(v);  // the shell [n+3]^d \ [n]^d starts active
    } else {
      std::uint64_t w = 0;
      for (int axis = 0; axis < d; ++axis) {
        w += static_cast<std::uint64_t>(big.coordinate(v, axis) - 1) * small.stride(axis);
      }
      if (config.test(static_cast<VertexId>(w))) out.set(v);
    }
  }
  return {big, out};
}

namespace {

SStructureReport verify_family(const TorusShape& shape, const ResidueFamily& fam,
                               int internal_degree, int forward_count, const Rule& stability_rule) {
  const VertexSet s = family_members(shape, fam);
  const VertexSet h = build_h(shape);
  const VertexSet s_or_h = s | h;
  const int d = shape.dim();

  SStructureReport report;

  // Stability of S u H holds for every n: wrapped steps land in H.
  s_or_h.for_each([&](VertexId v) {
    const int need = stability_rule.kind == RuleKind::kMajority ? d : stability_rule.threshold;
    if (members_among_neighbors(s_or_h, v) < need) ++report.stability_violations;
  });

  for (VertexId v = 0; v < shape.vertex_count(); ++v) {
    if (s.test(v)) {
      if (!fam.seam_free(shape, v)) continue;
      ++report.internal_checked;
      if (members_among_neighbors(s, v) != internal_degree) ++report.internal_violations;
    } else if (!h.test(v)) {
      if (!fam.seam_free(shape, v)) continue;
      ++report.forward_checked;
      const int j = shape.coord_sum(v);
      int count = 0;
      for (int axis = 0; axis < d; ++axis) {
        for (VertexId u : {shape.step_up(v, axis), shape.step_down(v, axis)}) {
          if (s.test(u) && shape.coord_sum(u) != j - 1) ++count;
        }
      }
      if (count != forward_count) ++report.forward_violations;
    }
  }
  return report;
}

}  // namespace

SStructureReport verify_s_structure(const TorusShape& shape, int r) {
  return verify_family(shape, s_threshold_family(shape.dim(), r), r, r - shape.dim(),
                       Rule::reversible(r));
}

SStructureReport verify_majority_s_structure(const TorusShape& shape) {
  return verify_family(shape, majority_s_family(shape.dim()), shape.dim(), 1, Rule::majority());
}

std::optional<ParityFill> first_full_parity_round(const Configuration& config, const Rule& rule,
                                                  int max_rounds) {
  const TorusShape& shape = config.shape();
  const int budget = max_rounds > 0 ? max_rounds : default_max_rounds(shape);
  const VertexSet a0 = parity_class(shape, 0);
  const VertexSet a1 = parity_class(shape, 1);

  Configuration prev(shape);  // state at t-1 once t >= 1
  Configuration cur = config;
  for (int t = 0; t <= budget; ++t) {
    if (a0.is_subset_of(cur)) return ParityFill{t, 0};
    if (a1.is_subset_of(cur)) return ParityFill{t, 1};
    if (t == budget) break;
    Configuration next = step(cur, rule);
    // Every state of an eventual cycle has been checked by the time the
    // two-step repeat shows up, so cycling without a full class is final.
    if (next == cur || (t >= 1 && next == prev)) return std::nullopt;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return std::nullopt;
}

}  // namespace dynamo
