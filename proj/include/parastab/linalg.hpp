#pragma once

#include <cstdint>
#include <vector>

#include "parastab/error.hpp"
#include "parastab/rational.hpp"

namespace parastab {

// Small dense exact linear algebra. Root systems live in rank <= 8, so
// everything here is O(n^3) Gauss-Jordan over the rationals with no
// attention to asymptotics.

using RatVec = std::vector<Rat>;
using RatMat = std::vector<std::vector<Rat>>; // row major, rectangular

inline RatMat mat_zero(std::size_t r, std::size_t c) {
  return RatMat(r, RatVec(c, Rat(0)));
}

inline RatMat mat_identity(std::size_t n) {
  RatMat m = mat_zero(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m[i][i] = 1;
  return m;
}

inline RatMat mat_mul(const RatMat &a, const RatMat &b) {
  std::size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  RatMat out = mat_zero(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      Rat s = 0;
      for (std::size_t t = 0; t < k; ++t)
        s += a[i][t] * b[t][j];
      out[i][j] = s;
    }
  return out;
}

inline RatVec mat_vec(const RatMat &a, const RatVec &x) {
  RatVec out(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rat s = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
      s += a[i][j] * x[j];
    out[i] = s;
  }
  return out;
}

inline RatMat mat_transpose(const RatMat &a) {
  std::size_t r = a.size(), c = a.empty() ? 0 : a[0].size();
  RatMat out = mat_zero(c, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      out[j][i] = a[i][j];
  return out;
}

inline RatVec vec_add(const RatVec &a, const RatVec &b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] + b[i];
  return out;
}

inline RatVec vec_sub(const RatVec &a, const RatVec &b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] - b[i];
  return out;
}

inline RatVec vec_scale(const Rat &c, const RatVec &a) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = c * a[i];
  return out;
}

inline bool vec_is_zero(const RatVec &a) {
  for (const Rat &x : a)
    if (x != 0)
      return false;
  return true;
}

// Plain coordinate dot product (no metric).
inline Rat vec_dot(const RatVec &a, const RatVec &b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

// x^T M y for a square matrix M.
inline Rat mat_bilinear(const RatMat &m, const RatVec &x, const RatVec &y) {
  return vec_dot(x, mat_vec(m, y));
}

inline Rat mat_det(RatMat a) {
  std::size_t n = a.size();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0)
      ++piv;
    if (piv == n)
      return Rat(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    Rat inv = Rat(1) / a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0)
        continue;
      Rat f = a[r][col] * inv;
      for (std::size_t c = col; c < n; ++c)
        a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

// Gauss-Jordan inverse; throws on a singular input.
inline RatMat mat_inverse(RatMat a, const std::string &location = "linalg.mat_inverse") {
  std::size_t n = a.size();
  RatMat inv = mat_identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0)
      ++piv;
    if (piv == n)
      throw DomainError(location, "matrix is singular");
    if (piv != col) {
      std::swap(a[piv], a[col]);
      std::swap(inv[piv], inv[col]);
    }
    Rat f = Rat(1) / a[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] *= f;
      inv[col][c] *= f;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0)
        continue;
      Rat g = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= g * a[col][c];
        inv[r][c] -= g * inv[col][c];
      }
    }
  }
  return inv;
}

// Solves A x = b for square nonsingular A.
inline RatVec mat_solve(const RatMat &a, const RatVec &b,
                        const std::string &location = "linalg.mat_solve") {
  return mat_vec(mat_inverse(a, location), b);
}

// Square integer matrix, row major. Used for Weyl group elements acting on
// root-basis coordinates; entries stay tiny (|entry| <= 8 even in rank 8).
struct IMat {
  int n = 0;
  std::vector<std::int64_t> a; // n*n entries

  static IMat identity(int n) {
    IMat m;
    m.n = n;
    m.a.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      m.at(i, i) = 1;
    return m;
  }

  std::int64_t &at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
  std::int64_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }

  bool operator==(const IMat &o) const { return n == o.n && a == o.a; }
  bool operator<(const IMat &o) const { return a < o.a; }
};

inline IMat imat_mul(const IMat &x, const IMat &y) {
  IMat out;
  out.n = x.n;
  out.a.assign(static_cast<std::size_t>(x.n) * x.n, 0);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      std::int64_t v = x.at(i, k);
      if (v == 0)
        continue;
      for (int j = 0; j < x.n; ++j)
        out.at(i, j) += v * y.at(k, j);
    }
  return out;
}

inline std::vector<std::int64_t> imat_vec(const IMat &m,
                                          const std::vector<std::int64_t> &x) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(m.n), 0);
  for (int i = 0; i < m.n; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < m.n; ++j)
      s += m.at(i, j) * x[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

inline RatVec imat_ratvec(const IMat &m, const RatVec &x) {
  RatVec out(static_cast<std::size_t>(m.n), Rat(0));
  for (int i = 0; i < m.n; ++i) {
    Rat s = 0;
    for (int j = 0; j < m.n; ++j)
      if (m.at(i, j) != 0)
        s += Rat(static_cast<long>(m.at(i, j))) * x[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

} // namespace parastab
