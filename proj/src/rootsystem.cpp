#include "parastab/rootsystem.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>

namespace parastab {

namespace {

using Cartan = std::vector<std::vector<std::int64_t>>;

Cartan cartan_init(int n) {
  Cartan a(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i)
    a[i][i] = 2;
  return a;
}

void link_single(Cartan &a, int i, int j) {
  a[i][j] = -1;
  a[j][i] = -1;
}

Cartan cartan_a(int n) {
  Cartan a = cartan_init(n);
  for (int i = 0; i + 1 < n; ++i)
    link_single(a, i, i + 1);
  return a;
}

Cartan cartan_b(int n) {
  // Last simple root short: <alpha_{n-1}, alpha_n^vee> = -2.
  Cartan a = cartan_a(n);
  a[n - 1][n - 2] = -2;
  a[n - 2][n - 1] = -1;
  return a;
}

Cartan cartan_c(int n) {
  // Last simple root long: <alpha_n, alpha_{n-1}^vee> = -2.
  Cartan a = cartan_a(n);
  a[n - 1][n - 2] = -1;
  a[n - 2][n - 1] = -2;
  return a;
}

Cartan cartan_d(int n) {
  Cartan a = cartan_init(n);
  for (int i = 0; i + 1 < n - 1; ++i)
    link_single(a, i, i + 1);
  link_single(a, n - 3, n - 1);
  return a;
}

Cartan cartan_e(int n) {
  // Chain 1-3-4-5-...-n with node 2 attached to node 4 (1-based labels).
  Cartan a = cartan_init(n);
  link_single(a, 0, 2);
  for (int i = 2; i + 1 < n; ++i)
    link_single(a, i, i + 1);
  link_single(a, 1, 3);
  return a;
}

Cartan cartan_f4() {
  Cartan a = cartan_init(4);
  link_single(a, 0, 1);
  link_single(a, 2, 3);
  // Double edge between 2 and 3 (1-based), roots 3 and 4 short.
  a[1][2] = -1;
  a[2][1] = -2;
  return a;
}

Cartan cartan_g2() {
  Cartan a = cartan_init(2);
  // First root short: <alpha_2, alpha_1^vee> = -3.
  a[0][1] = -3;
  a[1][0] = -1;
  return a;
}

constexpr int kMaxRank = 12;

void validate_rank(CartanType t, int n) {
  const char *msg = nullptr;
  switch (t) {
  case CartanType::A:
    if (n < 1)
      msg = "type A requires rank >= 1";
    break;
  case CartanType::B:
    if (n < 2)
      msg = "type B requires rank >= 2";
    break;
  case CartanType::C:
    if (n < 3)
      msg = "type C requires rank >= 3";
    break;
  case CartanType::D:
    if (n < 4)
      msg = "type D requires rank >= 4";
    break;
  case CartanType::E:
    if (n < 6 || n > 8)
      msg = "type E requires rank 6, 7 or 8";
    break;
  case CartanType::F:
    if (n != 4)
      msg = "type F requires rank 4";
    break;
  case CartanType::G:
    if (n != 2)
      msg = "type G requires rank 2";
    break;
  }
  if (msg == nullptr && n > kMaxRank)
    msg = "rank exceeds the supported maximum of 12";
  if (msg != nullptr)
    throw ValidationError("rootsystem.build", msg);
}

// Positive rationals d_i with d_i * a[i][j] = d_j * a[j][i], normalized so
// max d_i = 1; these are the half squared lengths of the simple roots.
std::vector<Rat> symmetrizer(const Cartan &a) {
  int n = static_cast<int>(a.size());
  std::vector<Rat> d(n, Rat(0));
  d[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      if (i == j || a[i][j] == 0)
        continue;
      Rat dj = d[i] * Rat(static_cast<long>(a[i][j])) /
               Rat(static_cast<long>(a[j][i]));
      if (d[j] == 0) {
        d[j] = dj;
        queue.push_back(j);
      } else if (d[j] != dj) {
        throw InternalError("rootsystem.build", "Cartan matrix is not symmetrizable");
      }
    }
  }
  Rat dmax = d[0];
  for (const Rat &x : d) {
    if (x == 0)
      throw InternalError("rootsystem.build", "Coxeter graph is disconnected");
    dmax = std::max(dmax, x);
  }
  for (Rat &x : d)
    x /= dmax;
  return d;
}

} // namespace

char cartan_type_char(CartanType t) {
  switch (t) {
  case CartanType::A: return 'A';
  case CartanType::B: return 'B';
  case CartanType::C: return 'C';
  case CartanType::D: return 'D';
  case CartanType::E: return 'E';
  case CartanType::F: return 'F';
  case CartanType::G: return 'G';
  }
  return '?';
}

CartanType cartan_type_from_char(char c) {
  switch (c) {
  case 'A': case 'a': return CartanType::A;
  case 'B': case 'b': return CartanType::B;
  case 'C': case 'c': return CartanType::C;
  case 'D': case 'd': return CartanType::D;
  case 'E': case 'e': return CartanType::E;
  case 'F': case 'f': return CartanType::F;
  case 'G': case 'g': return CartanType::G;
  default:
    throw ValidationError("rootsystem.build",
                          std::string("unknown Cartan type '") + c + "'");
  }
}

std::string RootSystem::name() const {
  return std::string(1, cartan_type_char(type)) + std::to_string(rank);
}

bool RootSystem::is_positive_root(const RootVec &v) const {
  return std::binary_search(positive_roots.begin(), positive_roots.end(), v);
}

RatVec RootSystem::fundamental_weight(int i) const {
  RatVec out(static_cast<std::size_t>(rank));
  for (int j = 0; j < rank; ++j)
    out[static_cast<std::size_t>(j)] = inv_cartan[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  return out;
}

RatVec RootSystem::fundamental_coweight_vector(int i) const {
  RatVec out(static_cast<std::size_t>(rank));
  for (int j = 0; j < rank; ++j)
    out[static_cast<std::size_t>(j)] = gram_inv[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  return out;
}

RootSystem build_root_system(CartanType type, int rank) {
  validate_rank(type, rank);
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  switch (type) {
  case CartanType::A: rs.cartan = cartan_a(rank); break;
  case CartanType::B: rs.cartan = cartan_b(rank); break;
  case CartanType::C: rs.cartan = cartan_c(rank); break;
  case CartanType::D: rs.cartan = cartan_d(rank); break;
  case CartanType::E: rs.cartan = cartan_e(rank); break;
  case CartanType::F: rs.cartan = cartan_f4(); break;
  case CartanType::G: rs.cartan = cartan_g2(); break;
  }

  rs.half_lengths = symmetrizer(rs.cartan);
  rs.gram = mat_zero(static_cast<std::size_t>(rank), static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      rs.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          rs.half_lengths[static_cast<std::size_t>(i)] *
          Rat(static_cast<long>(rs.cartan[i][j]));
  rs.gram_inv = mat_inverse(rs.gram, "rootsystem.build");

  RatMat cartan_q = mat_zero(static_cast<std::size_t>(rank), static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      cartan_q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          Rat(static_cast<long>(rs.cartan[i][j]));
  rs.inv_cartan = mat_inverse(cartan_q, "rootsystem.build");

  // Reflection s_i fixes every coordinate except the i-th, which picks up
  // minus the i-th row of the Cartan matrix.
  rs.simple_reflections.reserve(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) {
    IMat s = IMat::identity(rank);
    for (int j = 0; j < rank; ++j)
      s.at(i, j) = (i == j ? 1 : 0) - rs.cartan[i][j];
    rs.simple_reflections.push_back(s);
  }

  // Roots are the closure of the simple roots under simple reflections.
  std::set<RootVec> roots;
  std::deque<RootVec> frontier;
  for (int i = 0; i < rank; ++i) {
    RootVec e(static_cast<std::size_t>(rank), 0);
    e[static_cast<std::size_t>(i)] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    RootVec r = frontier.front();
    frontier.pop_front();
    for (int i = 0; i < rank; ++i) {
      RootVec img = imat_vec(rs.simple_reflections[static_cast<std::size_t>(i)], r);
      if (roots.insert(img).second)
        frontier.push_back(img);
    }
  }
  rs.all_roots = roots;
  for (const RootVec &r : roots) {
    bool nonneg = std::all_of(r.begin(), r.end(), [](std::int64_t c) { return c >= 0; });
    if (nonneg)
      rs.positive_roots.push_back(r);
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end());
  if (2 * rs.positive_roots.size() != rs.all_roots.size())
    throw InternalError("rootsystem.build", "root closure is not symmetric");
  return rs;
}

RootSystem build_root_system(const std::string &type_str, int rank) {
  if (type_str.size() != 1)
    throw ValidationError("rootsystem.build",
                          "Cartan type must be a single letter A-G, got '" + type_str + "'");
  return build_root_system(cartan_type_from_char(type_str[0]), rank);
}

Rat bilinear(const RootSystem &rs, const RatVec &x, const RatVec &y) {
  if (x.size() != static_cast<std::size_t>(rs.rank) || y.size() != x.size())
    throw ValidationError("rootsystem.bilinear", "vector size does not match rank");
  return mat_bilinear(rs.gram, x, y);
}

Rat bilinear_covector(const RootSystem &rs, const RatVec &f, const RatVec &g) {
  if (f.size() != static_cast<std::size_t>(rs.rank) || g.size() != f.size())
    throw ValidationError("rootsystem.bilinear", "covector size does not match rank");
  return mat_bilinear(rs.gram_inv, f, g);
}

namespace {
RatVec root_to_rat(const RootVec &r) {
  RatVec out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    out[i] = Rat(static_cast<long>(r[i]));
  return out;
}
} // namespace

Rat pair_coroot(const RootSystem &rs, const RootVec &beta, const RootVec &alpha) {
  if (!rs.is_root(alpha))
    throw DomainError("rootsystem.coroot", "vector is not a root");
  RatVec a = root_to_rat(alpha), b = root_to_rat(beta);
  Rat aa = bilinear(rs, a, a);
  return Rat(2) * bilinear(rs, b, a) / aa;
}

RatVec coroot_vector(const RootSystem &rs, const RootVec &alpha) {
  if (!rs.is_root(alpha))
    throw DomainError("rootsystem.coroot", "vector is not a root");
  RatVec a = root_to_rat(alpha);
  Rat aa = bilinear(rs, a, a);
  return vec_scale(Rat(2) / aa, a);
}

Rat covector_on_root(const RatVec &f, const RootVec &alpha) {
  Rat s = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    s += f[i] * Rat(static_cast<long>(alpha[i]));
  return s;
}

WeylElement weyl_identity(const RootSystem &rs) {
  WeylElement w;
  w.mat = IMat::identity(rs.rank);
  w.inv = w.mat;
  return w;
}

WeylElement weyl_from_word(const RootSystem &rs, const std::vector<int> &word) {
  WeylElement w = weyl_identity(rs);
  for (int i : word) {
    if (i < 0 || i >= rs.rank)
      throw ValidationError("rootsystem.weyl",
                            "generator index " + std::to_string(i + 1) + " out of range");
    const IMat &s = rs.simple_reflections[static_cast<std::size_t>(i)];
    w.mat = imat_mul(w.mat, s);
    w.inv = imat_mul(s, w.inv);
  }
  w.word = reduced_word_lex_least(rs, w.mat);
  return w;
}

WeylElement weyl_mul(const RootSystem &rs, const WeylElement &a, const WeylElement &b) {
  WeylElement w;
  w.mat = imat_mul(a.mat, b.mat);
  w.inv = imat_mul(b.inv, a.inv);
  w.word = reduced_word_lex_least(rs, w.mat);
  return w;
}

WeylElement weyl_inverse(const WeylElement &w) {
  WeylElement out;
  out.mat = w.inv;
  out.inv = w.mat;
  out.word.assign(w.word.rbegin(), w.word.rend());
  return out;
}

std::vector<int> reduced_word_lex_least(const RootSystem &rs, const IMat &m) {
  if (m.n != rs.rank)
    throw ValidationError("rootsystem.weyl", "matrix size does not match rank");
  // Column j of m is the image of alpha_j; it must be a root.
  for (int j = 0; j < rs.rank; ++j) {
    RootVec col(static_cast<std::size_t>(rs.rank));
    for (int i = 0; i < rs.rank; ++i)
      col[static_cast<std::size_t>(i)] = m.at(i, j);
    if (!rs.is_root(col))
      throw DomainError("rootsystem.weyl", "matrix does not map simple roots to roots");
  }
  // Exact inverse; a Weyl matrix has determinant +-1 so it is integral.
  IMat curinv;
  curinv.n = rs.rank;
  curinv.a.assign(static_cast<std::size_t>(rs.rank) * rs.rank, 0);
  {
    RatMat mq = mat_zero(static_cast<std::size_t>(rs.rank), static_cast<std::size_t>(rs.rank));
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j)
        mq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            Rat(static_cast<long>(m.at(i, j)));
    RatMat invq = mat_inverse(mq, "rootsystem.weyl");
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j) {
        Rat e = invq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (e.get_den() != 1)
          throw DomainError("rootsystem.weyl", "matrix is not a Weyl group element");
        curinv.at(i, j) = e.get_num().get_si();
      }
  }
  // Greedy left descent: i is a left descent of w iff w^{-1}(alpha_i) is a
  // negative root, and some reduced word for w then starts with s_i. Taking
  // the least descent at every step yields the lexicographically least
  // reduced word. Column i of curinv is w^{-1}(alpha_i).
  IMat cur = m;
  const IMat id = IMat::identity(rs.rank);
  std::vector<int> word;
  const std::size_t longest = rs.positive_roots.size();
  while (!(cur == id)) {
    int descent = -1;
    for (int i = 0; i < rs.rank && descent < 0; ++i) {
      bool negative = true;
      for (int r = 0; r < rs.rank && negative; ++r)
        negative = curinv.at(r, i) <= 0;
      if (negative)
        descent = i;
    }
    if (descent < 0 || word.size() >= longest)
      throw DomainError("rootsystem.weyl",
                        "matrix permutes the roots but is not a Weyl group element");
    word.push_back(descent);
    const IMat &s = rs.simple_reflections[static_cast<std::size_t>(descent)];
    cur = imat_mul(s, cur);     // w <- s_i w
    curinv = imat_mul(curinv, s);
  }
  return word;
}

std::size_t default_weyl_cap() {
  if (const char *env = std::getenv("PARASTAB_WEYL_CAP")) {
    std::size_t value = 0;
    bool ok = *env != '\0';
    for (const char *c = env; *c; ++c) {
      if (*c < '0' || *c > '9') {
        ok = false;
        break;
      }
      value = value * 10 + static_cast<std::size_t>(*c - '0');
    }
    if (!ok)
      throw ValidationError("rootsystem.weyl_cap",
                            "PARASTAB_WEYL_CAP must be a positive integer");
    if (value > 0)
      return value;
  }
  return 1000000;
}

WeylGroup enumerate_weyl(const RootSystem &rs, std::size_t cap) {
  if (cap == 0)
    cap = default_weyl_cap();
  WeylGroup g;
  std::map<std::vector<std::int64_t>, int> seen;
  std::deque<WeylElement> queue;
  WeylElement id = weyl_identity(rs);
  seen[id.mat.a] = 0;
  g.elements.push_back(id);
  queue.push_back(id);
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    for (int j = 0; j < rs.rank; ++j) {
      const IMat &s = rs.simple_reflections[static_cast<std::size_t>(j)];
      WeylElement next;
      next.mat = imat_mul(w.mat, s);
      next.inv = imat_mul(s, w.inv);
      next.word = w.word;
      next.word.push_back(j);
      if (seen.emplace(next.mat.a, static_cast<int>(g.elements.size())).second) {
        if (g.elements.size() >= cap)
          throw ResourceError("rootsystem.enumerate_weyl",
                              "Weyl group of " + rs.name() + " exceeds cap " +
                                  std::to_string(cap) + " (saw " +
                                  std::to_string(g.elements.size()) +
                                  " elements before stopping)");
        g.elements.push_back(next);
        queue.push_back(next);
      }
    }
  }
  return g;
}

std::size_t weyl_order(CartanType type, int rank) {
  auto fact = [](int n) {
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i)
      f *= static_cast<std::size_t>(i);
    return f;
  };
  std::size_t p2 = std::size_t{1} << rank;
  switch (type) {
  case CartanType::A: return fact(rank + 1);
  case CartanType::B:
  case CartanType::C: return p2 * fact(rank);
  case CartanType::D: return (p2 / 2) * fact(rank);
  case CartanType::E:
    if (rank == 6) return 51840;
    if (rank == 7) return 2903040;
    return 696729600;
  case CartanType::F: return 1152;
  case CartanType::G: return 12;
  }
  return 0;
}

std::vector<RatVec> weyl_orbit(const RootSystem &rs, const RatVec &v,
                               std::size_t cap) {
  if (v.size() != static_cast<std::size_t>(rs.rank))
    throw ValidationError("rootsystem.weyl_orbit", "vector size does not match rank");
  if (cap == 0)
    cap = default_weyl_cap();
  std::set<RatVec> orbit;
  std::deque<RatVec> queue;
  orbit.insert(v);
  queue.push_back(v);
  while (!queue.empty()) {
    RatVec x = queue.front();
    queue.pop_front();
    for (int i = 0; i < rs.rank; ++i) {
      RatVec img = imat_ratvec(rs.simple_reflections[static_cast<std::size_t>(i)], x);
      if (orbit.insert(img).second) {
        if (orbit.size() > cap)
          throw ResourceError("rootsystem.weyl_orbit",
                              "orbit exceeds cap " + std::to_string(cap) + " (saw " +
                                  std::to_string(orbit.size()) +
                                  " points before stopping)");
        queue.push_back(img);
      }
    }
  }
  return std::vector<RatVec>(orbit.begin(), orbit.end());
}

RatVec weyl_apply_covector(const WeylElement &w, const RatVec &f) {
  // (w.f) = (w^{-1})^T f, i.e. out_j = sum_i inv[i][j] f_i.
  RatVec out(f.size(), Rat(0));
  for (int j = 0; j < w.inv.n; ++j) {
    Rat s = 0;
    for (int i = 0; i < w.inv.n; ++i)
      if (w.inv.at(i, j) != 0)
        s += Rat(static_cast<long>(w.inv.at(i, j))) * f[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(j)] = s;
  }
  return out;
}

int ProductRootSystem::rank() const {
  int r = 0;
  for (const RootSystem &f : factors)
    r += f.rank;
  return r;
}

int ProductRootSystem::dim_g() const {
  int d = 0;
  for (const RootSystem &f : factors)
    d += f.dim_g();
  return d;
}

std::size_t ProductRootSystem::positive_count() const {
  std::size_t n = 0;
  for (const RootSystem &f : factors)
    n += f.positive_roots.size();
  return n;
}

ProductRootSystem
build_product_system(const std::vector<std::pair<CartanType, int>> &parts) {
  if (parts.empty())
    throw ValidationError("rootsystem.build_product", "empty factor list");
  ProductRootSystem p;
  for (const auto &[t, r] : parts)
    p.factors.push_back(build_root_system(t, r));
  return p;
}

} // namespace parastab
