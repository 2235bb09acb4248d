#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "parastab/linalg.hpp"
#include "parastab/rational.hpp"

namespace parastab {

// A dominant weight of SL_n written in fundamental weights: m[i] is the
// multiplicity of the (i+1)-th fundamental weight, so m has n-1 entries.
struct DominantWeightSL {
  int n = 0;
  std::vector<std::int64_t> m;
};

DominantWeightSL make_weight_sl(int n, std::vector<std::int64_t> m);

// Degree of the weight: sum over i of i * m_i with 1-based i.
std::int64_t weight_degree(const DominantWeightSL &w);

// Largest weight degree over the composition-series weights of a module.
std::int64_t jh_degree(const std::vector<DominantWeightSL> &weights);

// Slope window for a module filtered with slopes in [lmin, lmax], scaled
// by the composition degree: returns (jh * lmin, jh * lmax).
std::pair<Rat, Rat> module_bound_82(std::int64_t jh, const Rat &lmax_v,
                                    const Rat &lmin_v);

// Instability-slope bound for a representation of dimension dim_v twisted
// along the tower: (dim_v - 1) * jh * l / p. Requires l > 0; the bound is
// vacuous otherwise and the call refuses with a hypothesis error.
Rat rep_bound_83(std::int64_t dim_v, std::int64_t jh, const Rat &l, long p);

// A functional prescribed on a full-rank sublattice and extended to the
// ambient lattice: basis columns span the sublattice, values are the
// prescribed pairings, extension solves B^T f = v, and index = |det B| is
// the sublattice index. index * extension is always integral.
struct LatticeFunctional {
  int ambient_rank = 0;
  std::vector<std::vector<std::int64_t>> basis; // columns
  std::vector<std::int64_t> values;
  RatVec extension;
  mpz_class index;
};

LatticeFunctional extend_functional(int ambient_rank,
                                    const std::vector<std::vector<std::int64_t>> &basis,
                                    const std::vector<std::int64_t> &values);

} // namespace parastab
