#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "parastab/linalg.hpp"

namespace parastab {

enum class CartanType { A, B, C, D, E, F, G };

char cartan_type_char(CartanType t);
CartanType cartan_type_from_char(char c);

// A root in simple-root coordinates. Positive roots have all entries >= 0.
using RootVec = std::vector<std::int64_t>;

// A Weyl group element, stored as its action on root-basis coordinates
// (x -> mat * x) together with the matrix of the inverse element and a
// reduced word in 0-based simple reflection indices (applied left to
// right, i.e. word {0,1} means s_1 s_2 as operators).
struct WeylElement {
  std::vector<int> word;
  IMat mat;
  IMat inv;

  bool operator==(const WeylElement &o) const { return mat == o.mat; }
};

// An irreducible root system of a fixed Cartan type and rank, with every
// derived datum precomputed exactly: Cartan matrix, positive roots,
// bilinear form normalized so long roots have squared length 2,
// fundamental weights and simple reflection matrices.
struct RootSystem {
  CartanType type;
  int rank = 0;

  // cartan[i][j] = <alpha_j, alpha_i^vee>; diagonal 2.
  std::vector<std::vector<std::int64_t>> cartan;
  std::vector<RootVec> positive_roots; // sorted lexicographically
  std::set<RootVec> all_roots;         // positive and negative

  RatMat gram;       // gram[i][j] = (alpha_i, alpha_j)
  RatMat gram_inv;   // (fundamental coweight_i, fundamental coweight_j)
  RatMat inv_cartan; // column i = fundamental weight lambda_i in root coords
  std::vector<Rat> half_lengths; // d_i = (alpha_i, alpha_i)/2, max = 1

  std::vector<IMat> simple_reflections;

  int dim_g() const { return rank + 2 * static_cast<int>(positive_roots.size()); }
  std::string name() const;

  bool is_root(const RootVec &v) const { return all_roots.count(v) != 0; }
  bool is_positive_root(const RootVec &v) const;

  // Fundamental weight lambda_i (0-based i) in root coordinates.
  RatVec fundamental_weight(int i) const;
  // Fundamental coweight as a vector of V (root coordinates), i.e. the
  // image of the coweight under the bilinear-form identification.
  RatVec fundamental_coweight_vector(int i) const;
};

RootSystem build_root_system(CartanType type, int rank);
RootSystem build_root_system(const std::string &type_str, int rank);

// (x, y) for vectors in root coordinates.
Rat bilinear(const RootSystem &rs, const RatVec &x, const RatVec &y);

// (f, g) for covectors given by their values on the simple roots; this is
// the form induced on the dual space, so fundamental coweights pair via
// the inverse Gram matrix.
Rat bilinear_covector(const RootSystem &rs, const RatVec &f, const RatVec &g);

// <beta, alpha^vee> = 2(beta, alpha)/(alpha, alpha). alpha must be a root.
Rat pair_coroot(const RootSystem &rs, const RootVec &beta, const RootVec &alpha);

// alpha^vee = 2 alpha/(alpha, alpha) in root coordinates.
RatVec coroot_vector(const RootSystem &rs, const RootVec &alpha);

// Covector f evaluated on a root (sum of f_i times root coordinates).
Rat covector_on_root(const RatVec &f, const RootVec &alpha);

WeylElement weyl_identity(const RootSystem &rs);
// word uses 0-based generator indices; validated against the rank.
WeylElement weyl_from_word(const RootSystem &rs, const std::vector<int> &word);
WeylElement weyl_mul(const RootSystem &rs, const WeylElement &a, const WeylElement &b);
WeylElement weyl_inverse(const WeylElement &w);

// Lexicographically least reduced word of the element with matrix m,
// recovered by greedy left-descent. Validates that m is a Weyl matrix.
std::vector<int> reduced_word_lex_least(const RootSystem &rs, const IMat &m);

// Covector transport: (w.f)(x) = f(w^{-1} x).
RatVec weyl_apply_covector(const WeylElement &w, const RatVec &f);

struct WeylGroup {
  std::vector<WeylElement> elements; // breadth-first by length, words lex
};

// Full enumeration; refuses with a resource error when |W| would exceed
// cap, reporting how many elements were seen before giving up. cap = 0
// selects the policy default: the PARASTAB_WEYL_CAP environment variable
// when set, one million otherwise.
WeylGroup enumerate_weyl(const RootSystem &rs, std::size_t cap = 0);
std::size_t default_weyl_cap();

std::size_t weyl_order(CartanType type, int rank); // closed formula

// Orbit of a vector (root coordinates) under W, sorted lexicographically.
// Refuses with a resource error when the orbit would exceed cap (0 =
// policy default, as for enumerate_weyl).
std::vector<RatVec> weyl_orbit(const RootSystem &rs, const RatVec &v,
                               std::size_t cap = 0);

// A product of irreducible systems. Operations on products distribute
// over the factors; only the handful of consumers that make sense for
// products (dimension counts, instability constants) are provided.
struct ProductRootSystem {
  std::vector<RootSystem> factors;

  int rank() const;
  int dim_g() const;
  std::size_t positive_count() const;
};

ProductRootSystem
build_product_system(const std::vector<std::pair<CartanType, int>> &parts);

} // namespace parastab
