#pragma once

#include <map>
#include <utility>
#include <vector>

#include "parastab/parabolic.hpp"

namespace parastab {

// A degree covector d, stored by its values <alpha_i, d> on the simple
// roots. Pairing against any root is the integer combination of these.

// <w(alpha), d> for a facet-transported positive root.
Rat degree_pair(const Facet &f, const RatVec &d, const RootVec &alpha);

// Per-vertex numerical invariants of a facet against a degree covector:
// n_i = sum of <w(alpha), d> over the elementary set of the i-th vertex,
// together with the elementary set sizes.
struct InvariantProfile {
  Facet facet;
  std::map<int, Rat> n;            // 0-based vertex -> invariant
  std::map<int, std::int64_t> psi; // 0-based vertex -> elementary set size
};

InvariantProfile numerical_invariants(const Facet &f, const RatVec &d);

// Builds a profile from prescribed invariants (set sizes derived from the
// facet). Used when invariants come from elsewhere than a degree covector.
InvariantProfile make_profile(const Facet &f, const std::map<int, Rat> &n);

// Slope of the i-th vertex: n_i / psi_i.
Rat vertex_slope(const InvariantProfile &p, int i);

// The balance covector y = sum_i (n_i/psi_i) * (transported coweight_i),
// given by its values on the simple roots.
RatVec y_covector(const InvariantProfile &p);

// Slope of the block with the given shape: sum_i m_i * n_i / psi_i.
// Equals the average of <w(alpha), d> over the block when the profile
// came from d (the closed form the block decomposition satisfies).
Rat shape_slope(const InvariantProfile &p, const std::vector<std::int64_t> &shape_on_I);

// Slope of vertex i seen from the one-vertex facet {i} with the same
// chamber, computed from the profile of the finer facet alone:
// sum_j (<lambda_i, lambda_j^vee> / <lambda_i, lambda_i^vee>) * n_j/psi_j.
Rat slope_transfer(const InvariantProfile &p, int i);

// Degree of the facet: sum of <w(alpha), d> over U(P).
Rat parabolic_degree(const Facet &f, const RatVec &d);

// The canonical destabilizing facet: among the vertex sets of maximal
// degree, the unique one minimal under inclusion (dominant chamber).
// Throws an ambiguity error when several incomparable minima tie.
struct CanonicalResult {
  Facet facet;
  Rat degree;
  InvariantProfile profile;
};

CanonicalResult canonical_facet(const RootSystem &rs, const RatVec &d);
CanonicalResult canonical_facet_serial(const RootSystem &rs, const RatVec &d);
CanonicalResult canonical_facet_parallel(const RootSystem &rs, const RatVec &d);

// Tie-breaking core, exposed for testing: given the degree of every
// vertex-subset bitmask (index = mask), returns the canonical mask.
std::size_t canonical_choose(int rank, const std::vector<Rat> &degree_by_mask);

// Coefficients b_i > 0, i in I, of the U(P) root sum against the coroot
// pairings: b_i = <sum_{alpha in U(P)} alpha, alpha_i^vee>.
std::map<int, Rat> b_coefficients(const Facet &f);

// The instability constant of the group: 2 dim(g) times the maximum over
// nonempty vertex sets of sum_i b_i <lambda_i, lambda_i^vee>.
struct GroupConstant {
  Rat value;
  std::vector<int> argmax_I; // 0-based, lexicographically least among ties
};
GroupConstant b_of_g(const RootSystem &rs);

// Instability bounds for a facet in characteristic p with maximal
// cotangent-twist slope lmax_omega > 0:
//   bound         = (lmax_omega/p) * sum_i b_i <lambda_i, lambda_i^vee>
//   adjoint_bound = 2 dim(g) * bound.
struct InstabilityBounds {
  Rat bound;
  Rat adjoint_bound;
};
InstabilityBounds instability_bound_66(const Facet &f, const Rat &lmax_omega, long p);

// Threshold test: strong semistability is preserved once
// p > b(G) * lmax_omega. Reports the product and the verdict.
struct ThresholdReport {
  Rat b_of_g;
  Rat product;
  bool satisfied = false;
};
ThresholdReport semistable_threshold(const RootSystem &rs, const Rat &lmax_omega, long p);

// Product-system variants: the canonical vertex set of a product is the
// union of per-factor canonical sets, and the instability constant
// combines factor maxima against the total dimension.
struct ProductCanonicalResult {
  std::vector<CanonicalResult> factors;
  Rat degree; // sum over factors
};
ProductCanonicalResult canonical_facet_product(const ProductRootSystem &ps,
                                               const std::vector<RatVec> &d_parts);
GroupConstant b_of_g_product(const ProductRootSystem &ps);

} // namespace parastab
