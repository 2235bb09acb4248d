#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parastab/degrees.hpp"

namespace parastab {

// The largest cosine over non-zero angles between distinct closed cones
// of the Weyl coweight fan with trivial intersection.
//
// cos_sq carries |cos|^2 of the winning pair and sign its sign; these are
// exact whenever cos_sq_exact is set (always in rank <= 3, where every
// stationary angle has rational squared cosine). value presents the
// result as a single rational: the exact cosine when it is rational,
// otherwise the tightest dyadic upper bound found (exact = false). The
// value is strictly below 1 in every case.
struct S0Result {
  Rat value;
  bool exact = false;
  int sign = 0;    // sign of the winning cosine
  Rat cos_sq;      // squared cosine (or a certified upper bound for it)
  bool cos_sq_exact = false;
  std::string witness; // description of the winning cone pair
};

// rank_cap guards the full fan enumeration (cone pairs grow fast with
// rank); systems above it are refused with a resource error.
S0Result s0_estimate(const RootSystem &rs, int rank_cap = 3);
S0Result s0_estimate_serial(const RootSystem &rs, int rank_cap = 3);
S0Result s0_estimate_parallel(const RootSystem &rs, int rank_cap = 3);

// The Weyl element carrying fP to fQ as marked facets (chamber transport
// w_Q w_P^{-1}), presented by its lexicographically least reduced word;
// empty when the vertex sets differ.
std::optional<WeylElement> match_facets(const Facet &fP, const Facet &fQ);

// The double-sum expansion of |y(P)|^2 over vertex pairs; asserts exact
// agreement with the bilinear square of y_covector.
Rat y_norm_expand(const InvariantProfile &profile);

// Outcome of the two-facet contradiction test at a given epsilon and s0.
struct Certificate {
  Facet facet_p, facet_q;
  WeylElement sigma;
  Rat epsilon;
  Rat s0;

  Rat norm_p_sq, norm_q_sq; // |y(P)|^2, |y(Q)|^2 by the expansion
  bool growth_ok = false;   // |y(P)|^2 <= (1+eps)^2 |y(Q)|^2 (derived)
  bool pairing_ok = false;  // (y(Q),y(Q)) <= (y(Q),y(P)) (checked hypothesis)
  bool facets_equal = false;
  bool window_ok = false;   // 1 <= s0 (1+eps)

  enum class Verdict { Accept, AcceptWithWarning, Reject };
  Verdict verdict = Verdict::Reject;
  std::string violated; // inequality named when rejecting
  std::string warning;  // set on accept-with-warning
};

// Verifies the vertexwise inequality n(P;v) <= (1+eps) n(Q;sigma v),
// derives the norm growth bound, checks the pairing hypothesis, and
// decides: equal facets accept; distinct facets reject when the window
// inequality 1 <= s0(1+eps) fails (the two facets cannot both be
// canonical at this epsilon), otherwise accept with a warning that
// epsilon is too large to force a contradiction.
Certificate contradiction_certificate(const InvariantProfile &profile_p,
                                      const InvariantProfile &profile_q,
                                      const WeylElement &sigma, const Rat &epsilon,
                                      const Rat &s0);

// A finite stretch of per-level numerical invariants along a Frobenius
// tower: entry k carries the facet observed at level k and the raw
// (un-normalized) invariants indexed by the facet's vertices.
struct InvariantSequence {
  long p = 0;
  struct Entry {
    long long k = 0;
    Facet facet;
    std::vector<Rat> n; // aligned with facet.I
  };
  std::vector<Entry> entries;
};

InvariantSequence make_invariant_sequence(long p,
                                          std::vector<InvariantSequence::Entry> entries);

// Restricts to the longest constant-facet subsequence (earliest first
// occurrence breaks ties), normalizes each entry by p^k, and returns the
// first pair of ORIGINAL entry indices (l, l') with l < l' such that
// normalized(l') <= (1+epsilon) * normalized(l) componentwise; empty when
// no pair qualifies within the given data.
std::optional<std::pair<std::size_t, std::size_t>>
detect_stabilization(const InvariantSequence &seq, const Rat &epsilon);

} // namespace parastab
