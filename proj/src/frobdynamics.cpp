#include "parastab/frobdynamics.hpp"

#include <algorithm>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace parastab {

namespace {

using IVec = std::vector<std::int64_t>;

// Scales a nonzero rational vector to its primitive integer multiple.
IVec primitive_ray(const RatVec &v) {
  mpz_class l = 1;
  for (const Rat &x : v)
    l = lcm(l, x.get_den());
  std::vector<mpz_class> w;
  mpz_class g = 0;
  for (const Rat &x : v) {
    mpz_class e = x.get_num() * (l / x.get_den());
    w.push_back(e);
    g = gcd(g, e);
  }
  if (g == 0)
    throw InternalError("frobdynamics.s0", "zero vector cannot be a ray");
  IVec out;
  out.reserve(w.size());
  for (const mpz_class &e : w)
    out.push_back(mpz_class(e / g).get_si());
  return out;
}

struct Cone {
  std::vector<IVec> rays; // sorted, primitive
  int dim() const { return static_cast<int>(rays.size()); }
};

// All nonzero cones of the Weyl coweight fan: Weyl images of the faces of
// the dominant chamber, deduplicated by their extreme-ray sets.
std::vector<Cone> build_fan(const RootSystem &rs) {
  WeylGroup w = enumerate_weyl(rs);
  std::vector<IVec> base;
  for (int i = 0; i < rs.rank; ++i)
    base.push_back(primitive_ray(rs.fundamental_coweight_vector(i)));
  std::set<std::vector<IVec>> seen;
  std::vector<Cone> cones;
  const std::size_t nmasks = std::size_t{1} << rs.rank;
  for (const WeylElement &el : w.elements) {
    for (std::size_t mask = 1; mask < nmasks; ++mask) {
      std::vector<IVec> rays;
      for (int i = 0; i < rs.rank; ++i)
        if (mask & (std::size_t{1} << i))
          rays.push_back(imat_vec(el.mat, base[static_cast<std::size_t>(i)]));
      std::sort(rays.begin(), rays.end());
      if (seen.insert(rays).second)
        cones.push_back(Cone{std::move(rays)});
    }
  }
  return cones;
}

Rat gdot(const RootSystem &rs, const IVec &a, const IVec &b) {
  Rat s = 0;
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j)
      if (a[static_cast<std::size_t>(i)] != 0 && b[static_cast<std::size_t>(j)] != 0)
        s += Rat(static_cast<long>(a[static_cast<std::size_t>(i)])) *
             Rat(static_cast<long>(b[static_cast<std::size_t>(j)])) *
             rs.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return s;
}

// A candidate cosine, carried as (sign, cos^2) to stay rational. exact
// marks cos_sq as the exact squared cosine of an attained angle (as
// opposed to a certified upper bound).
struct AlgCos {
  int sign = 0;
  Rat cos_sq;
  bool exact = true;
};

// Orders candidates by the value they represent, sign * sqrt(cos_sq).
bool alg_less(const AlgCos &a, const AlgCos &b) {
  int sa = a.cos_sq == 0 ? 0 : a.sign;
  int sb = b.cos_sq == 0 ? 0 : b.sign;
  if (sa != sb)
    return sa < sb;
  if (sa > 0)
    return a.cos_sq < b.cos_sq;
  if (sa < 0)
    return a.cos_sq > b.cos_sq;
  return false;
}

// ---- exact polynomial helpers (ascending coefficients, monic input) ----

using Poly = std::vector<Rat>;

Rat poly_eval(const Poly &p, const Rat &x) {
  Rat v = 0;
  for (std::size_t i = p.size(); i-- > 0;)
    v = v * x + p[i];
  return v;
}

// Divides p by (x - 1); caller guarantees p(1) == 0.
Poly poly_deflate_at_one(const Poly &p) {
  Poly q(p.size() - 1, Rat(0));
  Rat carry = 0;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry;
    q[i - 1] = carry;
  }
  return q;
}

Poly poly_derivative(const Poly &p) {
  Poly d(p.size() > 1 ? p.size() - 1 : 1, Rat(0));
  for (std::size_t i = 1; i < p.size(); ++i)
    d[i - 1] = Rat(static_cast<long>(i)) * p[i];
  return d;
}

void poly_trim(Poly &p) {
  while (p.size() > 1 && p.back() == 0)
    p.pop_back();
}

// Remainder of polynomial division.
Poly poly_rem(Poly a, const Poly &b) {
  poly_trim(a);
  Poly bb = b;
  poly_trim(bb);
  while (a.size() >= bb.size() && !(a.size() == 1 && a[0] == 0)) {
    Rat f = a.back() / bb.back();
    std::size_t off = a.size() - bb.size();
    for (std::size_t i = 0; i < bb.size(); ++i)
      a[off + i] -= f * bb[i];
    a.pop_back();
    poly_trim(a);
    if (a.size() < bb.size())
      break;
  }
  if (a.empty())
    a.assign(1, Rat(0));
  return a;
}

// Number of distinct real roots of p in the half-open interval (a, b],
// by Sturm's theorem.
int sturm_roots_in(const Poly &p, const Rat &a, const Rat &b) {
  std::vector<Poly> chain;
  Poly p0 = p;
  poly_trim(p0);
  chain.push_back(p0);
  Poly p1 = poly_derivative(p0);
  poly_trim(p1);
  chain.push_back(p1);
  while (chain.back().size() > 1 || chain.back()[0] != 0) {
    Poly r = poly_rem(chain[chain.size() - 2], chain.back());
    for (Rat &c : r)
      c = -c;
    poly_trim(r);
    if (r.size() == 1 && r[0] == 0)
      break;
    chain.push_back(r);
  }
  auto signs_at = [&](const Rat &x) {
    int changes = 0, last = 0;
    for (const Poly &q : chain) {
      int s = sgn(poly_eval(q, x));
      if (s != 0) {
        if (last != 0 && s != last)
          ++changes;
        last = s;
      }
    }
    return changes;
  };
  return signs_at(a) - signs_at(b);
}

// Smallest rational of the form m/2^k bounding the largest root of q
// from above, strictly below 1. All roots of q are real, in [0, 1).
Rat root_upper_bound(const Poly &q, const std::string &location) {
  Rat lo = 0, hi = 1;
  for (int step = 0; step < 120; ++step) {
    if (hi < 1 && step >= 48)
      break;
    Rat mid = (lo + hi) / 2;
    if (sturm_roots_in(q, mid, Rat(1)) == 0 && poly_eval(q, mid) != 0)
      hi = mid;
    else
      lo = mid;
  }
  if (!(hi < 1))
    throw InternalError(location, "failed to separate a fan angle from 1");
  return hi;
}

// Nullspace basis of a square rational matrix.
std::vector<RatVec> rat_nullspace(RatMat m) {
  const std::size_t n = m.size();
  std::vector<int> pivot_col_of_row;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && m[piv][col] == 0)
      ++piv;
    if (piv == n)
      continue;
    std::swap(m[piv], m[row]);
    Rat f = Rat(1) / m[row][col];
    for (std::size_t c = 0; c < n; ++c)
      m[row][c] *= f;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0)
        continue;
      Rat g = m[r][col];
      for (std::size_t c = 0; c < n; ++c)
        m[r][c] -= g * m[row][c];
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col_of_row)
    is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<RatVec> basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col])
      continue;
    RatVec v(n, Rat(0));
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
      v[static_cast<std::size_t>(pivot_col_of_row[r])] = -m[r][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial of a k x k matrix by Faddeev-LeVerrier,
// returned ascending: p(x) = x^k + c_{k-1} x^{k-1} + ... + c_0.
Poly char_poly(const RatMat &t) {
  const std::size_t k = t.size();
  Poly p(k + 1, Rat(0));
  p[k] = 1;
  RatMat m = mat_identity(k);
  Rat c = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // M <- T * (M + c*I) with the previous coefficient c (c_0 = 1 skip).
    if (i > 1) {
      for (std::size_t r = 0; r < k; ++r)
        m[r][r] += c;
      m = mat_mul(t, m);
    } else {
      m = t;
    }
    Rat tr = 0;
    for (std::size_t r = 0; r < k; ++r)
      tr += m[r][r];
    c = -tr / Rat(static_cast<long>(i));
    p[k - i] = c;
  }
  return p;
}

// Columns of the cone's rays as a rank x dim rational matrix.
RatMat cone_basis(const RootSystem &rs, const Cone &c) {
  RatMat b = mat_zero(static_cast<std::size_t>(rs.rank), c.rays.size());
  for (std::size_t j = 0; j < c.rays.size(); ++j)
    for (int i = 0; i < rs.rank; ++i)
      b[static_cast<std::size_t>(i)][j] =
          Rat(static_cast<long>(c.rays[j][static_cast<std::size_t>(i)]));
  return b;
}

// Stationary-angle candidates between two cones with trivial
// intersection; ray-ray corners always, plus interior stationary pairs
// from the spectrum of the composed projection.
void pair_candidates(const RootSystem &rs, const Cone &cone_a, const Cone &cone_b,
                     std::vector<AlgCos> &out) {
  for (const IVec &u : cone_a.rays)
    for (const IVec &v : cone_b.rays) {
      Rat uv = gdot(rs, u, v);
      AlgCos c;
      c.sign = sgn(uv);
      c.cos_sq = uv * uv / (gdot(rs, u, u) * gdot(rs, v, v));
      out.push_back(c);
    }
  if (cone_a.dim() == 1 && cone_b.dim() == 1)
    return;
  // Work with the smaller cone as the eigen side.
  const Cone &ca = cone_a.dim() <= cone_b.dim() ? cone_a : cone_b;
  const Cone &cb = cone_a.dim() <= cone_b.dim() ? cone_b : cone_a;
  RatMat ba = cone_basis(rs, ca), bb = cone_basis(rs, cb);
  RatMat g = rs.gram;
  RatMat ma = mat_mul(mat_transpose(ba), mat_mul(g, ba)); // ka x ka, SPD
  RatMat mb = mat_mul(mat_transpose(bb), mat_mul(g, bb)); // kb x kb, SPD
  RatMat cband = mat_mul(mat_transpose(bb), mat_mul(g, ba)); // kb x ka
  RatMat mb_inv = mat_inverse(mb, "frobdynamics.s0");
  RatMat inner = mat_mul(mat_transpose(cband), mat_mul(mb_inv, cband)); // ka x ka
  RatMat t = mat_mul(mat_inverse(ma, "frobdynamics.s0"), inner);
  // Eigenvalues of t are squared cosines of the principal angles between
  // the two spans; eigenvalue 1 belongs to the span intersection, which
  // meets neither cone interior, so deflate it away.
  Poly p = char_poly(t);
  while (poly_eval(p, Rat(1)) == 0 && p.size() > 1)
    p = poly_deflate_at_one(p);
  std::vector<Rat> rational_roots;
  bool bounded_tail = false;
  Rat tail_bound;
  if (p.size() == 1) {
    // Nothing left after deflation.
  } else if (p.size() == 2) {
    rational_roots.push_back(-p[0]);
  } else if (p.size() == 3) {
    // x^2 + a x + b.
    Rat a = p[1], b = p[0];
    Rat disc = a * a - 4 * b;
    if (disc < 0)
      throw InternalError("frobdynamics.s0", "complex principal angle spectrum");
    mpz_class ns, ds;
    bool square = mpz_perfect_square_p(disc.get_num().get_mpz_t()) &&
                  mpz_perfect_square_p(disc.get_den().get_mpz_t());
    if (square) {
      mpz_sqrt(ns.get_mpz_t(), disc.get_num().get_mpz_t());
      mpz_sqrt(ds.get_mpz_t(), disc.get_den().get_mpz_t());
      Rat root_d(ns, ds);
      rational_roots.push_back((-a + root_d) / 2);
      rational_roots.push_back((-a - root_d) / 2);
    } else {
      bounded_tail = true;
      tail_bound = root_upper_bound(p, "frobdynamics.s0");
    }
  } else {
    bounded_tail = true;
    tail_bound = root_upper_bound(p, "frobdynamics.s0");
  }
  for (const Rat &lambda : rational_roots) {
    if (!(lambda > 0 && lambda < 1))
      continue;
    RatMat shifted = t;
    for (std::size_t i = 0; i < shifted.size(); ++i)
      shifted[i][i] -= lambda;
    std::vector<RatVec> ns = rat_nullspace(shifted);
    if (ns.size() != 1) {
      // Degenerate eigenspace: keep the value as an uncertified bound.
      out.push_back(AlgCos{+1, lambda, false});
      continue;
    }
    const RatVec &c = ns[0];
    int eps = 0;
    bool feasible = true;
    for (const Rat &ci : c) {
      int s = sgn(ci);
      if (s == 0) {
        feasible = false;
        break;
      }
      if (eps == 0)
        eps = s;
      else if (s != eps)
        feasible = false;
    }
    if (!feasible)
      continue;
    // Coordinates of the projected partner in the big cone's ray basis.
    RatVec cc = mat_vec(mb_inv, mat_vec(cband, c));
    for (const Rat &ci : cc)
      if (!(sgn(ci) == eps)) {
        feasible = false;
        break;
      }
    if (feasible)
      out.push_back(AlgCos{+1, lambda, true});
  }
  if (bounded_tail && tail_bound > 0)
    out.push_back(AlgCos{+1, tail_bound, false});
}

std::string cone_str(const Cone &c) {
  std::string s = "cone[";
  for (std::size_t j = 0; j < c.rays.size(); ++j) {
    if (j)
      s += ";";
    s += "(";
    for (std::size_t i = 0; i < c.rays[j].size(); ++i) {
      if (i)
        s += ",";
      s += std::to_string(c.rays[j][i]);
    }
    s += ")";
  }
  return s + "]";
}

bool cones_share_ray(const Cone &a, const Cone &b) {
  // Ray lists are sorted; fan cones intersect trivially iff they share
  // no extreme ray.
  std::size_t i = 0, j = 0;
  while (i < a.rays.size() && j < b.rays.size()) {
    if (a.rays[i] == b.rays[j])
      return true;
    if (a.rays[i] < b.rays[j])
      ++i;
    else
      ++j;
  }
  return false;
}

// Smallest dyadic >= sqrt(q) (strictly above when q is not a square),
// guaranteed < 1 for q < 1.
Rat dyadic_sqrt_upper(const Rat &q, const std::string &location) {
  if (!(q < 1))
    throw InternalError(location, "squared cosine not below 1");
  for (int k = 48; k <= 48 * 5; k += 48) {
    mpz_class four_k = mpz_class(1) << (2 * k);
    // ceil(q * 4^k)
    mpz_class scaled_num = q.get_num() * four_k;
    mpz_class cdiv;
    mpz_cdiv_q(cdiv.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den().get_mpz_t());
    mpz_class m;
    mpz_sqrt(m.get_mpz_t(), cdiv.get_mpz_t());
    if (m * m < cdiv)
      m += 1;
    mpz_class two_k = mpz_class(1) << k;
    if (m < two_k) {
      Rat u(m, two_k);
      u.canonicalize();
      return u;
    }
  }
  throw InternalError(location, "could not separate sqrt bound from 1");
}

// Largest dyadic <= sqrt(q).
Rat dyadic_sqrt_lower(const Rat &q) {
  const int k = 48;
  mpz_class four_k = mpz_class(1) << (2 * k);
  mpz_class scaled_num = q.get_num() * four_k;
  mpz_class fdiv;
  mpz_fdiv_q(fdiv.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den().get_mpz_t());
  mpz_class m;
  mpz_sqrt(m.get_mpz_t(), fdiv.get_mpz_t());
  Rat u(m, mpz_class(1) << k);
  u.canonicalize();
  return u;
}

S0Result finish_s0(const AlgCos &best, const std::string &witness) {
  S0Result r;
  r.sign = best.cos_sq == 0 ? 0 : best.sign;
  r.cos_sq = best.cos_sq;
  r.cos_sq_exact = best.exact;
  r.witness = witness;
  bool square = mpz_perfect_square_p(best.cos_sq.get_num().get_mpz_t()) &&
                mpz_perfect_square_p(best.cos_sq.get_den().get_mpz_t());
  if (best.exact && square) {
    mpz_class ns, ds;
    mpz_sqrt(ns.get_mpz_t(), best.cos_sq.get_num().get_mpz_t());
    mpz_sqrt(ds.get_mpz_t(), best.cos_sq.get_den().get_mpz_t());
    Rat root(ns, ds);
    root.canonicalize();
    r.value = r.sign < 0 ? -root : root;
    r.exact = true;
  } else if (r.sign >= 0) {
    r.value = dyadic_sqrt_upper(best.cos_sq, "frobdynamics.s0");
    r.exact = false;
  } else {
    r.value = -dyadic_sqrt_lower(best.cos_sq);
    r.exact = false;
  }
  if (!(r.value < 1))
    throw InternalError("frobdynamics.s0", "s0 must be strictly below 1");
  return r;
}

struct PairBest {
  bool has = false;
  AlgCos best;
};

PairBest best_of_pair(const RootSystem &rs, const Cone &a, const Cone &b) {
  std::vector<AlgCos> cands;
  pair_candidates(rs, a, b, cands);
  PairBest pb;
  for (const AlgCos &c : cands)
    if (!pb.has || alg_less(pb.best, c)) {
      pb.best = c;
      pb.has = true;
    }
  return pb;
}

S0Result s0_reduce(const RootSystem &rs, const std::vector<Cone> &cones,
                   const std::vector<std::pair<std::size_t, std::size_t>> &pairs,
                   const std::vector<PairBest> &bests) {
  bool any = false;
  AlgCos best;
  std::size_t best_pair = 0;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (!bests[k].has)
      continue;
    if (!any || alg_less(best, bests[k].best)) {
      best = bests[k].best;
      best_pair = k;
      any = true;
    }
  }
  if (!any)
    throw InternalError("frobdynamics.s0", "no valid cone pair found");
  return finish_s0(best, cone_str(cones[pairs[best_pair].first]) + " vs " +
                             cone_str(cones[pairs[best_pair].second]));
}

std::vector<std::pair<std::size_t, std::size_t>>
valid_pairs(const std::vector<Cone> &cones) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j)
      if (!cones_share_ray(cones[i], cones[j]))
        pairs.emplace_back(i, j);
  return pairs;
}

void check_rank_cap(const RootSystem &rs, int rank_cap) {
  if (rs.rank > rank_cap)
    throw ResourceError("frobdynamics.s0",
                        "rank " + std::to_string(rs.rank) +
                            " exceeds the fan enumeration cap " +
                            std::to_string(rank_cap));
}

} // namespace

S0Result s0_estimate_serial(const RootSystem &rs, int rank_cap) {
  check_rank_cap(rs, rank_cap);
  std::vector<Cone> cones = build_fan(rs);
  auto pairs = valid_pairs(cones);
  std::vector<PairBest> bests(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k)
    bests[k] = best_of_pair(rs, cones[pairs[k].first], cones[pairs[k].second]);
  return s0_reduce(rs, cones, pairs, bests);
}

S0Result s0_estimate_parallel(const RootSystem &rs, int rank_cap) {
  check_rank_cap(rs, rank_cap);
  std::vector<Cone> cones = build_fan(rs);
  auto pairs = valid_pairs(cones);
  std::vector<PairBest> bests(pairs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 32)
#endif
  for (long long k = 0; k < static_cast<long long>(pairs.size()); ++k)
    bests[static_cast<std::size_t>(k)] =
        best_of_pair(rs, cones[pairs[static_cast<std::size_t>(k)].first],
                     cones[pairs[static_cast<std::size_t>(k)].second]);
  return s0_reduce(rs, cones, pairs, bests);
}

S0Result s0_estimate(const RootSystem &rs, int rank_cap) {
#ifdef _OPENMP
  return s0_estimate_parallel(rs, rank_cap);
#else
  return s0_estimate_serial(rs, rank_cap);
#endif
}

std::optional<WeylElement> match_facets(const Facet &fp, const Facet &fq) {
  const RootSystem &rs = fp.sys();
  if (fq.rs == nullptr || rs.name() != fq.sys().name())
    throw ValidationError("frobdynamics.match_facets",
                          "facets belong to different root systems");
  if (!facet_same_type(fp, fq))
    return std::nullopt;
  WeylElement sigma = weyl_mul(rs, fq.chamber, weyl_inverse(fp.chamber));
  // The transport carries each marked vertex of P to the same-index
  // vertex of Q; verify as a safety net.
  for (int i : fp.I) {
    RatVec moved = imat_ratvec(sigma.mat, facet_vertex(fp, i));
    if (moved != facet_vertex(fq, i))
      throw InternalError("frobdynamics.match_facets",
                          "chamber transport failed to map vertices");
  }
  return sigma;
}

Rat y_norm_expand(const InvariantProfile &profile) {
  const RootSystem &rs = profile.facet.sys();
  Rat total = 0;
  for (const auto &[i, ni] : profile.n)
    for (const auto &[j, nj] : profile.n) {
      Rat coeff = ni * nj /
                  (Rat(static_cast<long>(profile.psi.at(i))) *
                   Rat(static_cast<long>(profile.psi.at(j))));
      total += coeff * rs.gram_inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  RatVec y = y_covector(profile);
  if (total != bilinear_covector(rs, y, y))
    throw InternalError("frobdynamics.y_norm_expand",
                        "expansion disagrees with the bilinear square");
  return total;
}

Certificate contradiction_certificate(const InvariantProfile &profile_p,
                                      const InvariantProfile &profile_q,
                                      const WeylElement &sigma, const Rat &epsilon,
                                      const Rat &s0) {
  const Facet &fp = profile_p.facet;
  const Facet &fq = profile_q.facet;
  const RootSystem &rs = fp.sys();
  if (fq.rs == nullptr || rs.name() != fq.sys().name())
    throw ValidationError("frobdynamics.certificate",
                          "profiles belong to different root systems");
  if (epsilon <= 0)
    throw ValidationError("frobdynamics.certificate", "epsilon must be positive");
  if (!facet_same_type(fp, fq))
    throw DomainError("frobdynamics.certificate",
                      "sigma cannot map the facets: vertex sets differ");
  for (int i : fp.I) {
    RatVec moved = imat_ratvec(sigma.mat, facet_vertex(fp, i));
    if (moved != facet_vertex(fq, i))
      throw DomainError("frobdynamics.certificate",
                        "sigma does not map vertex " + std::to_string(i + 1) +
                            " of the first facet to the second");
  }
  for (const auto &[i, ni] : profile_p.n)
    if (ni < 0)
      throw DomainError("frobdynamics.certificate",
                        "negative invariant at vertex " + std::to_string(i + 1) +
                            " of the first profile");
  for (const auto &[i, ni] : profile_q.n)
    if (ni < 0)
      throw DomainError("frobdynamics.certificate",
                        "negative invariant at vertex " + std::to_string(i + 1) +
                            " of the second profile");

  Certificate cert;
  cert.facet_p = fp;
  cert.facet_q = fq;
  cert.sigma = sigma;
  cert.epsilon = epsilon;
  cert.s0 = s0;

  Rat one_plus = Rat(1) + epsilon;
  // (*): vertexwise growth control.
  for (int i : fp.I)
    if (!(profile_p.n.at(i) <= one_plus * profile_q.n.at(i)))
      throw ValidationError("frobdynamics.certificate",
                            "inequality (*) fails at vertex " + std::to_string(i + 1) +
                                ": " + rat_str(profile_p.n.at(i)) + " > (1+eps) * " +
                                rat_str(profile_q.n.at(i)));

  cert.norm_p_sq = y_norm_expand(profile_p);
  cert.norm_q_sq = y_norm_expand(profile_q);
  // Derived: the expansion is termwise dominated, entry by entry, since
  // the dual Gram matrix has nonnegative entries and the invariants are
  // nonnegative.
  cert.growth_ok = cert.norm_p_sq <= one_plus * one_plus * cert.norm_q_sq;
  if (!cert.growth_ok)
    throw InternalError("frobdynamics.certificate",
                        "norm growth bound failed despite vertexwise control");

  RatVec yp = y_covector(profile_p);
  RatVec yq = y_covector(profile_q);
  cert.pairing_ok = bilinear_covector(rs, yq, yq) <= bilinear_covector(rs, yq, yp);

  cert.facets_equal = facet_equal(fp, fq);
  cert.window_ok = Rat(1) <= s0 * one_plus;
  if (cert.facets_equal) {
    cert.verdict = Certificate::Verdict::Accept;
  } else if (!cert.window_ok) {
    cert.verdict = Certificate::Verdict::Reject;
    cert.violated = "1 <= s0*(1+epsilon)";
  } else {
    cert.verdict = Certificate::Verdict::AcceptWithWarning;
    cert.warning = "epsilon too large to force a contradiction";
  }
  return cert;
}

InvariantSequence make_invariant_sequence(long p,
                                          std::vector<InvariantSequence::Entry> entries) {
  if (p < 2)
    throw ValidationError("frobdynamics.sequence", "characteristic must be at least 2");
  if (entries.empty())
    throw ValidationError("frobdynamics.sequence", "empty invariant sequence");
  const RootSystem &rs = entries.front().facet.sys();
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const auto &entry = entries[e];
    if (entry.facet.rs == nullptr || entry.facet.sys().name() != rs.name())
      throw ValidationError("frobdynamics.sequence",
                            "entry " + std::to_string(e) +
                                " belongs to a different root system");
    if (entry.k < 0)
      throw ValidationError("frobdynamics.sequence",
                            "entry " + std::to_string(e) + " has negative level");
    if (e > 0 && !(entries[e - 1].k < entry.k))
      throw ValidationError("frobdynamics.sequence",
                            "levels must be strictly increasing at entry " +
                                std::to_string(e));
    if (entry.n.size() != entry.facet.I.size())
      throw ValidationError("frobdynamics.sequence",
                            "entry " + std::to_string(e) + " has " +
                                std::to_string(entry.n.size()) +
                                " invariants but its facet has " +
                                std::to_string(entry.facet.I.size()) + " vertices");
  }
  InvariantSequence seq;
  seq.p = p;
  seq.entries = std::move(entries);
  return seq;
}

std::optional<std::pair<std::size_t, std::size_t>>
detect_stabilization(const InvariantSequence &seq, const Rat &epsilon) {
  if (seq.entries.empty())
    throw ValidationError("frobdynamics.detect_stabilization", "empty invariant sequence");
  if (epsilon <= 0)
    throw ValidationError("frobdynamics.detect_stabilization", "epsilon must be positive");
  // Group entries by facet (vertex set + chamber) and keep the longest
  // group; earliest first occurrence wins ties.
  using Key = std::pair<std::vector<int>, std::vector<std::int64_t>>;
  std::map<Key, std::vector<std::size_t>> groups;
  for (std::size_t e = 0; e < seq.entries.size(); ++e) {
    const Facet &f = seq.entries[e].facet;
    groups[{f.I, f.chamber.mat.a}].push_back(e);
  }
  const std::vector<std::size_t> *chosen = nullptr;
  for (const auto &[key, idx] : groups)
    if (chosen == nullptr || idx.size() > chosen->size() ||
        (idx.size() == chosen->size() && idx.front() < chosen->front()))
      chosen = &idx;
  // Normalized invariants within the chosen subsequence.
  std::vector<std::vector<Rat>> normalized;
  for (std::size_t e : *chosen) {
    const auto &entry = seq.entries[e];
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(seq.p),
                  static_cast<unsigned long>(entry.k));
    std::vector<Rat> row;
    row.reserve(entry.n.size());
    for (const Rat &x : entry.n)
      row.push_back(x / Rat(pk));
    normalized.push_back(std::move(row));
  }
  Rat one_plus = Rat(1) + epsilon;
  for (std::size_t a = 0; a < chosen->size(); ++a)
    for (std::size_t b = a + 1; b < chosen->size(); ++b) {
      bool ok = true;
      for (std::size_t i = 0; i < normalized[a].size() && ok; ++i)
        ok = normalized[b][i] <= one_plus * normalized[a][i];
      if (ok)
        return std::make_pair((*chosen)[a], (*chosen)[b]);
    }
  return std::nullopt;
}

} // namespace parastab
