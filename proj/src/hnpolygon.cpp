#include "parastab/hnpolygon.hpp"

#include <string>

#include "parastab/linalg.hpp"

namespace parastab {

std::int64_t HNData::total_rank() const {
  std::int64_t r = 0;
  for (const HNQuotient &q : quotients)
    r += q.rank;
  return r;
}

Rat HNData::total_degree() const {
  Rat d = 0;
  for (const HNQuotient &q : quotients)
    d += q.degree;
  return d;
}

Rat HNData::mu_max() const { return quotients.front().slope(); }
Rat HNData::mu_min() const { return quotients.back().slope(); }

HNData make_hn(const std::vector<std::pair<std::int64_t, Rat>> &quotients) {
  if (quotients.empty())
    throw ValidationError("hnpolygon.make_hn", "no quotients given");
  HNData h;
  for (std::size_t i = 0; i < quotients.size(); ++i) {
    const auto &[r, d] = quotients[i];
    if (r < 1)
      throw ValidationError("hnpolygon.make_hn",
                            "quotient " + std::to_string(i + 1) +
                                " has rank " + std::to_string(r) + ", need >= 1");
    HNQuotient q{r, d};
    q.degree.canonicalize(); // callers may pass non-canonical mpq values
    if (!h.quotients.empty() && !(h.quotients.back().slope() > q.slope()))
      throw ValidationError("hnpolygon.make_hn",
                            "quotient " + std::to_string(i + 1) +
                                " breaks strict slope decrease");
    h.quotients.push_back(q);
  }
  return h;
}

Rat deg_hn_pairs(const HNData &h) {
  Rat s = 0;
  for (std::size_t i = 0; i < h.quotients.size(); ++i)
    for (std::size_t j = i + 1; j < h.quotients.size(); ++j) {
      Rat rr = Rat(static_cast<long>(h.quotients[i].rank)) *
               Rat(static_cast<long>(h.quotients[j].rank));
      s += rr * (h.quotients[i].slope() - h.quotients[j].slope());
    }
  return s;
}

Rat deg_hn_shoelace(const HNData &h) {
  // Polygon vertices (cumulative rank, cumulative degree) from the origin;
  // close the loop back to the origin. The filtration polygon lies above
  // its chord, so the signed shoelace sum of this traversal is <= 0 and
  // twice the enclosed area is its negation.
  std::vector<std::pair<Rat, Rat>> pts;
  pts.emplace_back(Rat(0), Rat(0));
  Rat r = 0, d = 0;
  for (const HNQuotient &q : h.quotients) {
    r += Rat(static_cast<long>(q.rank));
    d += q.degree;
    pts.emplace_back(r, d);
  }
  Rat twice_area = 0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const auto &[x0, y0] = pts[k];
    const auto &[x1, y1] = pts[(k + 1) % pts.size()];
    twice_area += x1 * y0 - x0 * y1;
  }
  return twice_area;
}

Rat deg_hn(const HNData &h) {
  Rat pairs = deg_hn_pairs(h);
  if (pairs != deg_hn_shoelace(h))
    throw InternalError("hnpolygon.deg_hn",
                        "pairwise and shoelace evaluations disagree");
  return pairs;
}

HNBoundsReport hn_bounds(const HNData &h) {
  HNBoundsReport rep;
  rep.value = deg_hn(h);
  Rat spread = h.mu_max() - h.mu_min();
  Rat r(static_cast<long>(h.total_rank()));
  rep.lower = (r - 1) * spread;
  rep.upper = r * r / 4 * spread;
  rep.ok = rep.lower <= rep.value && rep.value <= rep.upper;
  return rep;
}

std::vector<HNBatchItem> hn_batch_serial(const std::vector<HNData> &items) {
  std::vector<HNBatchItem> out(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    HNBoundsReport rep = hn_bounds(items[i]);
    out[i] = HNBatchItem{rep.value, rep.ok};
  }
  return out;
}

std::vector<HNBatchItem> hn_batch_parallel(const std::vector<HNData> &items) {
  std::vector<HNBatchItem> out(items.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
  for (long long i = 0; i < static_cast<long long>(items.size()); ++i) {
    HNBoundsReport rep = hn_bounds(items[static_cast<std::size_t>(i)]);
    out[static_cast<std::size_t>(i)] = HNBatchItem{rep.value, rep.ok};
  }
  return out;
}

std::vector<HNBatchItem> hn_batch(const std::vector<HNData> &items) {
#ifdef _OPENMP
  return hn_batch_parallel(items);
#else
  return hn_batch_serial(items);
#endif
}

FrobeniusSequence frobenius_sequence(const std::vector<HNData> &levels, long p) {
  if (p < 2)
    throw ValidationError("hnpolygon.frobenius_sequence",
                          "characteristic must be at least 2");
  if (levels.empty())
    throw ValidationError("hnpolygon.frobenius_sequence", "no levels given");
  std::int64_t r = levels.front().total_rank();
  FrobeniusSequence seq;
  Rat power = 1;
  for (std::size_t l = 0; l < levels.size(); ++l) {
    if (levels[l].total_rank() != r)
      throw ValidationError("hnpolygon.frobenius_sequence",
                            "level " + std::to_string(l) + " has rank " +
                                std::to_string(levels[l].total_rank()) +
                                " but level 0 has rank " + std::to_string(r));
    seq.normalized.push_back(deg_hn(levels[l]) / power);
    power *= p;
  }
  seq.monotone = true;
  for (std::size_t l = 0; l + 1 < seq.normalized.size() && seq.monotone; ++l)
    seq.monotone = seq.normalized[l] <= seq.normalized[l + 1];
  return seq;
}

namespace {
void check_rank_char(std::int64_t r, long p, const std::string &location) {
  if (r < 1)
    throw ValidationError(location, "rank must be at least 1");
  if (p < 2)
    throw ValidationError(location, "characteristic must be at least 2");
}
} // namespace

Rat lmax_bound(std::int64_t r, long p, const Rat &mu_max, const Rat &lmax_omega) {
  check_rank_char(r, p, "hnpolygon.lmax_bound");
  if (lmax_omega <= 0)
    return mu_max;
  return mu_max + Rat(static_cast<long>(r - 1)) * lmax_omega / Rat(p);
}

Rat lmin_bound(std::int64_t r, long p, const Rat &mu_min, const Rat &lmax_omega) {
  check_rank_char(r, p, "hnpolygon.lmin_bound");
  if (lmax_omega <= 0)
    return mu_min;
  return mu_min - Rat(static_cast<long>(r - 1)) * lmax_omega / Rat(p);
}

SlopeRange make_slope_range(const Rat &lmin, const Rat &lmax) {
  if (lmin > lmax)
    throw ValidationError("hnpolygon.slope_range", "lmin exceeds lmax");
  return SlopeRange{lmin, lmax};
}

SlopeRange tensor_range(const SlopeRange &a, const SlopeRange &b) {
  return SlopeRange{a.lmin + b.lmin, a.lmax + b.lmax};
}

namespace {
// binom(m + k, k) as a polynomial in the rational m.
Rat binom_shifted(const Rat &m, long k) {
  Rat b = 1;
  for (long i = 1; i <= k; ++i)
    b *= (m + Rat(i)) / Rat(i);
  return b;
}
} // namespace

SheafNumerics hilbert_coefficients(const std::vector<std::pair<Rat, Rat>> &chi_values,
                                   long d) {
  if (d < 0)
    throw ValidationError("hnpolygon.hilbert_coefficients", "dimension must be >= 0");
  if (chi_values.size() != static_cast<std::size_t>(d) + 1)
    throw ValidationError("hnpolygon.hilbert_coefficients",
                          "need exactly " + std::to_string(d + 1) + " samples, got " +
                              std::to_string(chi_values.size()));
  for (std::size_t i = 0; i < chi_values.size(); ++i)
    for (std::size_t j = i + 1; j < chi_values.size(); ++j)
      if (chi_values[i].first == chi_values[j].first)
        throw ValidationError("hnpolygon.hilbert_coefficients",
                              "duplicate sample point " + rat_str(chi_values[i].first));
  // Interpolate chi(m) = sum_i a_i binom(m+d-i, d-i) at the given points.
  RatMat mat = mat_zero(chi_values.size(), chi_values.size());
  RatVec rhs(chi_values.size());
  for (std::size_t k = 0; k < chi_values.size(); ++k) {
    for (long i = 0; i <= d; ++i)
      mat[k][static_cast<std::size_t>(i)] = binom_shifted(chi_values[k].first, d - i);
    rhs[k] = chi_values[k].second;
  }
  SheafNumerics out;
  out.d = d;
  out.a = mat_solve(mat, rhs, "hnpolygon.hilbert_coefficients");
  out.integral = true;
  for (const Rat &x : out.a)
    if (x.get_den() != 1)
      out.integral = false;
  return out;
}

Rat hilbert_eval(const SheafNumerics &s, const Rat &m) {
  Rat v = 0;
  for (long i = 0; i <= s.d; ++i)
    v += s.a[static_cast<std::size_t>(i)] * binom_shifted(m, s.d - i);
  return v;
}

bool hn_bounds_check(const HNData &h) { return hn_bounds(h).ok; }

Rat discriminant(std::int64_t r, const Rat &c1_sq, const Rat &c2) {
  if (r < 1)
    throw ValidationError("hnpolygon.discriminant", "rank must be at least 1");
  return Rat(2) * Rat(static_cast<long>(r)) * c2 -
         Rat(static_cast<long>(r - 1)) * c1_sq;
}

SandwichReport adjoint_sandwich(const Rat &deg_hn_e, const Rat &deg_hn_adj,
                                std::int64_t dim_g, std::int64_t dim_l) {
  if (deg_hn_e < 0 || deg_hn_adj < 0)
    throw ValidationError("hnpolygon.adjoint_sandwich",
                          "instability degrees are nonnegative");
  if (dim_g < dim_l || dim_l < 0)
    throw ValidationError("hnpolygon.adjoint_sandwich",
                          "need dim_g >= dim_l >= 0");
  SandwichReport rep;
  rep.lower = Rat(static_cast<long>(dim_g + dim_l)) * deg_hn_e;
  rep.upper = Rat(2) * Rat(static_cast<long>(dim_g)) * deg_hn_e;
  rep.ok = rep.lower <= deg_hn_adj && deg_hn_adj <= rep.upper;
  return rep;
}

} // namespace parastab
