#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "parastab/rational.hpp"

namespace parastab {

// One graded piece of a slope filtration: its rank and degree.
struct HNQuotient {
  std::int64_t rank = 0;
  Rat degree;

  Rat slope() const { return degree / Rat(static_cast<long>(rank)); }
};

// A filtration profile: quotients with strictly decreasing slopes.
struct HNData {
  std::vector<HNQuotient> quotients;

  std::int64_t total_rank() const;
  Rat total_degree() const;
  Rat mu_max() const;
  Rat mu_min() const;
};

// Validates ranks >= 1 and strict slope decrease, naming the offending
// quotient (1-based) on failure.
HNData make_hn(const std::vector<std::pair<std::int64_t, Rat>> &quotients);

// The instability degree, via the pairwise formula
//   sum_{i<j} r_i r_j (mu_i - mu_j).
Rat deg_hn_pairs(const HNData &h);

// The same quantity as twice the area between the polygon of the
// filtration and the chord from (0,0) to (rank, degree).
Rat deg_hn_shoelace(const HNData &h);

// Pairwise formula, cross-checked against the shoelace route; the two
// must agree exactly or the library aborts with an internal error.
Rat deg_hn(const HNData &h);

// (r-1)(mu_max-mu_min) <= deg_hn <= (r^2/4)(mu_max-mu_min).
struct HNBoundsReport {
  Rat value;
  Rat lower;
  Rat upper;
  bool ok = false;
};
HNBoundsReport hn_bounds(const HNData &h);

// Batch evaluation of deg_hn + bounds over many profiles; the parallel
// variant is the production kernel, the serial one its reference.
struct HNBatchItem {
  Rat deg;
  bool bounds_ok = false;
};
std::vector<HNBatchItem> hn_batch_serial(const std::vector<HNData> &items);
std::vector<HNBatchItem> hn_batch_parallel(const std::vector<HNData> &items);
std::vector<HNBatchItem> hn_batch(const std::vector<HNData> &items);

// Frobenius-normalized instability degrees deg_hn(level l) / p^l for a
// tower of pullbacks. All levels must have the same total rank; monotone
// reports whether the sequence is nondecreasing.
struct FrobeniusSequence {
  std::vector<Rat> normalized;
  bool monotone = false;
};
FrobeniusSequence frobenius_sequence(const std::vector<HNData> &levels, long p);

// Upper bound for the limit maximal slope under Frobenius pullbacks:
// mu_max when lmax_omega <= 0, else mu_max + (r-1) lmax_omega / p.
Rat lmax_bound(std::int64_t r, long p, const Rat &mu_max, const Rat &lmax_omega);
// Mirror bound for the limit minimal slope.
Rat lmin_bound(std::int64_t r, long p, const Rat &mu_min, const Rat &lmax_omega);

// Limit slope ranges add under tensor product.
struct SlopeRange {
  Rat lmin;
  Rat lmax;
};
SlopeRange make_slope_range(const Rat &lmin, const Rat &lmax);
SlopeRange tensor_range(const SlopeRange &a, const SlopeRange &b);

// Euler characteristic interpolation on a d-dimensional variety: given
// d+1 samples (m, chi(m)) at distinct m, recover the coefficients a_i of
//   chi(m) = sum_{i=0}^{d} a_i binom(m+d-i, d-i).
// Genuine sheaves have integer a_i; integral reports whether they are.
struct SheafNumerics {
  long d = 0;
  std::vector<Rat> a; // a[0..d]
  bool integral = false;
};
SheafNumerics hilbert_coefficients(const std::vector<std::pair<Rat, Rat>> &chi_values,
                                   long d);

// Evaluates chi(m) back from coefficients (round trip check).
Rat hilbert_eval(const SheafNumerics &s, const Rat &m);

bool hn_bounds_check(const HNData &h);

// Discriminant 2 r c2 - (r-1) c1^2 of a rank-r sheaf.
Rat discriminant(std::int64_t r, const Rat &c1_sq, const Rat &c2);

// Sandwich between the instability degree of a bundle and of its adjoint:
// (dim_g + dim_l) deg_e <= deg_adj <= 2 dim_g deg_e.
struct SandwichReport {
  Rat lower;
  Rat upper;
  bool ok = false;
};
SandwichReport adjoint_sandwich(const Rat &deg_hn_e, const Rat &deg_hn_adj,
                                std::int64_t dim_g, std::int64_t dim_l);

} // namespace parastab
