#include "parastab/slbounds.hpp"

#include "parastab/error.hpp"

namespace parastab {

DominantWeightSL make_weight_sl(int n, std::vector<std::int64_t> m) {
  if (n < 2)
    throw ValidationError("slbounds.weight", "n must be at least 2");
  if (m.size() != static_cast<std::size_t>(n - 1))
    throw ValidationError("slbounds.weight",
                          "expected " + std::to_string(n - 1) +
                              " multiplicities, got " + std::to_string(m.size()));
  for (std::int64_t x : m)
    if (x < 0)
      throw ValidationError("slbounds.weight", "multiplicities must be nonnegative");
  return DominantWeightSL{n, std::move(m)};
}

std::int64_t weight_degree(const DominantWeightSL &w) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < w.m.size(); ++i)
    total += static_cast<std::int64_t>(i + 1) * w.m[i];
  return total;
}

std::int64_t jh_degree(const std::vector<DominantWeightSL> &weights) {
  if (weights.empty())
    throw ValidationError("slbounds.jh_degree", "empty weight list");
  std::int64_t best = weight_degree(weights.front());
  for (std::size_t i = 1; i < weights.size(); ++i) {
    if (weights[i].n != weights.front().n)
      throw ValidationError("slbounds.jh_degree",
                            "weights belong to different groups");
    best = std::max(best, weight_degree(weights[i]));
  }
  return best;
}

std::pair<Rat, Rat> module_bound_82(std::int64_t jh, const Rat &lmax_v,
                                    const Rat &lmin_v) {
  if (jh < 0)
    throw ValidationError("slbounds.module_bound", "degree must be nonnegative");
  if (lmax_v < lmin_v)
    throw ValidationError("slbounds.module_bound", "slope window is empty");
  Rat d(static_cast<long>(jh));
  return {d * lmin_v, d * lmax_v};
}

Rat rep_bound_83(std::int64_t dim_v, std::int64_t jh, const Rat &l, long p) {
  if (dim_v < 2)
    throw ValidationError("slbounds.rep_bound", "representation dimension must be at least 2");
  if (jh < 0)
    throw ValidationError("slbounds.rep_bound", "degree must be nonnegative");
  if (p < 2)
    throw ValidationError("slbounds.rep_bound", "characteristic must be at least 2");
  if (l <= 0)
    throw HypothesisError("slbounds.rep_bound",
                          "bound requires a positive slope gap, got " + rat_str(l));
  return Rat(static_cast<long>(dim_v - 1)) * Rat(static_cast<long>(jh)) * l /
         Rat(static_cast<long>(p));
}

LatticeFunctional extend_functional(int ambient_rank,
                                    const std::vector<std::vector<std::int64_t>> &basis,
                                    const std::vector<std::int64_t> &values) {
  const std::size_t n = basis.size();
  if (ambient_rank < 1)
    throw ValidationError("slbounds.extend", "ambient rank must be positive");
  if (n != static_cast<std::size_t>(ambient_rank))
    throw ValidationError("slbounds.extend",
                          "expected " + std::to_string(ambient_rank) +
                              " basis columns, got " + std::to_string(n));
  for (const auto &col : basis)
    if (col.size() != n)
      throw ValidationError("slbounds.extend",
                            "basis must be square: expected columns of length " +
                                std::to_string(n));
  if (values.size() != n)
    throw ValidationError("slbounds.extend",
                          "expected " + std::to_string(n) + " values, got " +
                              std::to_string(values.size()));
  // Solve B^T f = v exactly.
  RatMat bt = mat_zero(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      bt[j][i] = Rat(static_cast<long>(basis[j][i]));
  Rat det = mat_det(bt);
  if (det == 0)
    throw ValidationError("slbounds.extend", "basis vectors are linearly dependent");
  RatVec v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = Rat(static_cast<long>(values[i]));
  RatVec f = mat_solve(bt, v, "slbounds.extend");

  LatticeFunctional out;
  out.ambient_rank = static_cast<int>(n);
  out.basis = basis;
  out.values = values;
  out.extension = f;
  out.index = abs(det.get_num());
  if (det.get_den() != 1)
    throw InternalError("slbounds.extend", "integer matrix with fractional determinant");
  for (const Rat &x : f) {
    Rat scaled = x * Rat(out.index);
    if (scaled.get_den() != 1)
      throw InternalError("slbounds.extend",
                          "index times extension must be integral");
  }
  return out;
}

} // namespace parastab
