#include "parastab/degrees.hpp"

#include <algorithm>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace parastab {

namespace {

std::string mask_str(int rank, std::size_t mask) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < rank; ++i)
    if (mask & (std::size_t{1} << i)) {
      if (!first)
        s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

std::vector<int> mask_to_indices(int rank, std::size_t mask) {
  std::vector<int> out;
  for (int i = 0; i < rank; ++i)
    if (mask & (std::size_t{1} << i))
      out.push_back(i);
  return out;
}

// Pairings <w(alpha), d> and I-support bitmasks for every positive root.
struct PairingTable {
  std::vector<Rat> pairing;
  std::vector<std::size_t> support;
};

PairingTable pairing_table(const RootSystem &rs, const RatVec &d) {
  if (d.size() != static_cast<std::size_t>(rs.rank))
    throw ValidationError("degrees.pairing", "degree covector size does not match rank");
  PairingTable t;
  t.pairing.reserve(rs.positive_roots.size());
  t.support.reserve(rs.positive_roots.size());
  for (const RootVec &alpha : rs.positive_roots) {
    t.pairing.push_back(covector_on_root(d, alpha));
    t.pairing.back().canonicalize(); // callers may pass non-canonical mpq values
    std::size_t m = 0;
    for (int i = 0; i < rs.rank; ++i)
      if (alpha[static_cast<std::size_t>(i)] != 0)
        m |= std::size_t{1} << i;
    t.support.push_back(m);
  }
  return t;
}

Rat mask_degree(const PairingTable &t, std::size_t mask) {
  Rat s = 0;
  for (std::size_t r = 0; r < t.pairing.size(); ++r)
    if (t.support[r] & mask)
      s += t.pairing[r];
  return s;
}

} // namespace

Rat degree_pair(const Facet &f, const RatVec &d, const RootVec &alpha) {
  if (d.size() != static_cast<std::size_t>(f.sys().rank))
    throw ValidationError("degrees.pairing", "degree covector size does not match rank");
  return covector_on_root(d, transport_root(f, alpha));
}

InvariantProfile numerical_invariants(const Facet &f, const RatVec &d) {
  InvariantProfile p;
  p.facet = f;
  for (std::size_t k = 0; k < f.I.size(); ++k) {
    std::vector<std::int64_t> pattern(f.I.size(), 0);
    pattern[k] = 1;
    std::vector<RootVec> psi = elementary_set(f, pattern);
    Rat n = 0;
    for (const RootVec &alpha : psi)
      n += degree_pair(f, d, alpha);
    p.n[f.I[k]] = n;
    p.psi[f.I[k]] = static_cast<std::int64_t>(psi.size());
  }
  return p;
}

InvariantProfile make_profile(const Facet &f, const std::map<int, Rat> &n) {
  InvariantProfile p;
  p.facet = f;
  for (std::size_t k = 0; k < f.I.size(); ++k) {
    int i = f.I[k];
    auto it = n.find(i);
    if (it == n.end())
      throw ValidationError("degrees.make_profile",
                            "missing invariant for vertex " + std::to_string(i + 1));
    std::vector<std::int64_t> pattern(f.I.size(), 0);
    pattern[k] = 1;
    p.n[i] = it->second;
    p.psi[i] = static_cast<std::int64_t>(elementary_set(f, pattern).size());
  }
  if (n.size() != f.I.size())
    throw ValidationError("degrees.make_profile",
                          "invariants given for indices outside the facet");
  return p;
}

Rat vertex_slope(const InvariantProfile &p, int i) {
  auto it = p.n.find(i);
  if (it == p.n.end())
    throw DomainError("degrees.vertex_slope",
                      "index " + std::to_string(i + 1) + " is not a vertex of the facet");
  return it->second / Rat(static_cast<long>(p.psi.at(i)));
}

RatVec y_covector(const InvariantProfile &p) {
  const RootSystem &rs = p.facet.sys();
  RatVec y(static_cast<std::size_t>(rs.rank), Rat(0));
  for (const auto &[i, n] : p.n) {
    Rat coeff = n / Rat(static_cast<long>(p.psi.at(i)));
    RatVec cw = facet_vertex_coweight(p.facet, i);
    for (std::size_t j = 0; j < y.size(); ++j)
      y[j] += coeff * cw[j];
  }
  return y;
}

Rat shape_slope(const InvariantProfile &p, const std::vector<std::int64_t> &shape_on_I) {
  if (shape_on_I.size() != p.facet.I.size())
    throw ValidationError("degrees.shape_slope", "shape length does not match the facet");
  Rat s = 0;
  for (std::size_t k = 0; k < shape_on_I.size(); ++k) {
    int i = p.facet.I[k];
    s += Rat(static_cast<long>(shape_on_I[k])) * p.n.at(i) /
         Rat(static_cast<long>(p.psi.at(i)));
  }
  return s;
}

Rat slope_transfer(const InvariantProfile &p, int i) {
  const RootSystem &rs = p.facet.sys();
  if (p.n.find(i) == p.n.end())
    throw DomainError("degrees.slope_transfer",
                      "index " + std::to_string(i + 1) + " is not a vertex of the facet");
  // <lambda_i, lambda_j^vee> is the j-th root coordinate of lambda_i.
  Rat self = rs.inv_cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
  Rat s = 0;
  for (const auto &[j, n] : p.n) {
    Rat pairing = rs.inv_cartan[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    s += (pairing / self) * n / Rat(static_cast<long>(p.psi.at(j)));
  }
  return s;
}

Rat parabolic_degree(const Facet &f, const RatVec &d) {
  Rat s = 0;
  for (const RootVec &alpha : u_set(f))
    s += degree_pair(f, d, alpha);
  return s;
}

std::size_t canonical_choose(int rank, const std::vector<Rat> &degree_by_mask) {
  const std::size_t nmasks = std::size_t{1} << rank;
  if (degree_by_mask.size() != nmasks)
    throw ValidationError("degrees.canonical", "degree table has wrong size");
  Rat best = degree_by_mask[0];
  for (std::size_t m = 1; m < nmasks; ++m)
    best = std::max(best, degree_by_mask[m]);
  std::vector<std::size_t> argmax;
  for (std::size_t m = 0; m < nmasks; ++m)
    if (degree_by_mask[m] == best)
      argmax.push_back(m);
  // Keep the masks minimal under inclusion.
  std::vector<std::size_t> minimal;
  for (std::size_t m : argmax) {
    bool is_min = true;
    for (std::size_t o : argmax)
      if (o != m && (o & m) == o) {
        is_min = false;
        break;
      }
    if (is_min)
      minimal.push_back(m);
  }
  if (minimal.size() != 1) {
    std::string tied;
    for (std::size_t m : minimal) {
      if (!tied.empty())
        tied += ", ";
      tied += mask_str(rank, m);
    }
    throw AmbiguityError("degrees.canonical",
                         "maximal degree attained by incomparable vertex sets " + tied);
  }
  return minimal[0];
}

namespace {

CanonicalResult canonical_from_table(const RootSystem &rs, const RatVec &d,
                                     const std::vector<Rat> &degs) {
  std::size_t mask = canonical_choose(rs.rank, degs);
  CanonicalResult res;
  res.facet = make_facet(rs, mask_to_indices(rs.rank, mask));
  res.degree = degs[mask];
  res.profile = numerical_invariants(res.facet, d);
  return res;
}

} // namespace

CanonicalResult canonical_facet_serial(const RootSystem &rs, const RatVec &d) {
  PairingTable t = pairing_table(rs, d);
  const std::size_t nmasks = std::size_t{1} << rs.rank;
  std::vector<Rat> degs(nmasks);
  for (std::size_t m = 0; m < nmasks; ++m)
    degs[m] = mask_degree(t, m);
  return canonical_from_table(rs, d, degs);
}

CanonicalResult canonical_facet_parallel(const RootSystem &rs, const RatVec &d) {
  PairingTable t = pairing_table(rs, d);
  const std::size_t nmasks = std::size_t{1} << rs.rank;
  std::vector<Rat> degs(nmasks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (long long m = 0; m < static_cast<long long>(nmasks); ++m)
    degs[static_cast<std::size_t>(m)] = mask_degree(t, static_cast<std::size_t>(m));
  return canonical_from_table(rs, d, degs);
}

CanonicalResult canonical_facet(const RootSystem &rs, const RatVec &d) {
#ifdef _OPENMP
  return canonical_facet_parallel(rs, d);
#else
  return canonical_facet_serial(rs, d);
#endif
}

std::map<int, Rat> b_coefficients(const Facet &f) {
  const RootSystem &rs = f.sys();
  RootVec s(static_cast<std::size_t>(rs.rank), 0);
  for (const RootVec &alpha : u_set(f))
    for (int j = 0; j < rs.rank; ++j)
      s[static_cast<std::size_t>(j)] += alpha[static_cast<std::size_t>(j)];
  std::map<int, Rat> b;
  for (int i = 0; i < rs.rank; ++i) {
    std::int64_t v = 0;
    for (int j = 0; j < rs.rank; ++j)
      v += rs.cartan[i][j] * s[static_cast<std::size_t>(j)];
    bool in_I = std::binary_search(f.I.begin(), f.I.end(), i);
    if (in_I) {
      if (v <= 0)
        throw InternalError("degrees.b_coefficients",
                            "coefficient b_" + std::to_string(i + 1) + " is not positive");
      b[i] = Rat(static_cast<long>(v));
    } else if (v != 0) {
      throw InternalError("degrees.b_coefficients",
                          "U(P) root sum pairs nontrivially outside the vertex set");
    }
  }
  return b;
}

namespace {

// sum_i b_i <lambda_i, lambda_i^vee> for the facet with vertex set I.
Rat weighted_b_sum(const RootSystem &rs, const Facet &f) {
  Rat s = 0;
  for (const auto &[i, bi] : b_coefficients(f))
    s += bi * rs.inv_cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
  return s;
}

} // namespace

GroupConstant b_of_g(const RootSystem &rs) {
  const std::size_t nmasks = std::size_t{1} << rs.rank;
  Rat best = 0;
  std::vector<std::size_t> argmax;
  for (std::size_t m = 1; m < nmasks; ++m) {
    Facet f = make_facet(rs, mask_to_indices(rs.rank, m));
    Rat v = weighted_b_sum(rs, f);
    if (argmax.empty() || v > best) {
      best = v;
      argmax.assign(1, m);
    } else if (v == best) {
      argmax.push_back(m);
    }
  }
  // Lexicographically least index list among ties.
  std::vector<std::vector<int>> lists;
  for (std::size_t m : argmax)
    lists.push_back(mask_to_indices(rs.rank, m));
  std::sort(lists.begin(), lists.end());
  GroupConstant gc;
  gc.value = Rat(2) * Rat(static_cast<long>(rs.dim_g())) * best;
  gc.argmax_I = lists.front();
  return gc;
}

InstabilityBounds instability_bound_66(const Facet &f, const Rat &lmax_omega, long p) {
  if (p < 2)
    throw ValidationError("degrees.instability_bound_66",
                          "characteristic must be at least 2");
  if (lmax_omega <= 0)
    throw HypothesisError("degrees.instability_bound_66",
                          "the bound requires a positive maximal cotangent-twist slope");
  const RootSystem &rs = f.sys();
  InstabilityBounds ib;
  ib.bound = weighted_b_sum(rs, f) * lmax_omega / Rat(p);
  ib.adjoint_bound = Rat(2) * Rat(static_cast<long>(rs.dim_g())) * ib.bound;
  return ib;
}

ThresholdReport semistable_threshold(const RootSystem &rs, const Rat &lmax_omega, long p) {
  if (p < 2)
    throw ValidationError("degrees.semistable_threshold",
                          "characteristic must be at least 2");
  ThresholdReport r;
  r.b_of_g = b_of_g(rs).value;
  r.product = r.b_of_g * lmax_omega;
  r.satisfied = Rat(p) > r.product;
  return r;
}

ProductCanonicalResult canonical_facet_product(const ProductRootSystem &ps,
                                               const std::vector<RatVec> &d_parts) {
  if (d_parts.size() != ps.factors.size())
    throw ValidationError("degrees.canonical_product",
                          "expected one degree covector per factor");
  ProductCanonicalResult out;
  out.degree = 0;
  for (std::size_t k = 0; k < ps.factors.size(); ++k) {
    out.factors.push_back(canonical_facet(ps.factors[k], d_parts[k]));
    out.degree += out.factors.back().degree;
  }
  return out;
}

GroupConstant b_of_g_product(const ProductRootSystem &ps) {
  // Vertex sets of a product are disjoint unions; the weighted sum splits,
  // every factor's best is positive, so the maximum is the sum of factor
  // maxima, with the global dimension in front.
  Rat inner = 0;
  GroupConstant gc;
  int offset = 0;
  for (const RootSystem &f : ps.factors) {
    GroupConstant part = b_of_g(f);
    inner += part.value / (Rat(2) * Rat(static_cast<long>(f.dim_g())));
    for (int i : part.argmax_I)
      gc.argmax_I.push_back(i + offset);
    offset += f.rank;
  }
  gc.value = Rat(2) * Rat(static_cast<long>(ps.dim_g())) * inner;
  return gc;
}

} // namespace parastab
