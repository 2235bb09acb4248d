#include "parastab/parabolic.hpp"

#include <algorithm>

namespace parastab {

namespace {

void validate_indices(const RootSystem &rs, const std::vector<int> &I,
                      const std::string &location) {
  for (int i : I)
    if (i < 0 || i >= rs.rank)
      throw ValidationError(location,
                            "vertex index " + std::to_string(i + 1) +
                                " out of range for " + rs.name());
}

} // namespace

Facet make_facet(const RootSystem &rs, std::vector<int> I) {
  return make_facet(rs, std::move(I), weyl_identity(rs));
}

Facet make_facet(const RootSystem &rs, std::vector<int> I, WeylElement chamber) {
  validate_indices(rs, I, "parabolic.make_facet");
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  if (chamber.mat.n != rs.rank)
    throw ValidationError("parabolic.make_facet", "chamber matrix does not match rank");
  Facet f;
  f.rs = &rs;
  f.I = std::move(I);
  f.chamber = std::move(chamber);
  return f;
}

bool facet_equal(const Facet &a, const Facet &b) {
  return a.I == b.I && a.chamber.mat == b.chamber.mat;
}

bool facet_same_type(const Facet &a, const Facet &b) { return a.I == b.I; }

LevelShape level_and_shape(const Facet &f, const RootVec &alpha) {
  const RootSystem &rs = f.sys();
  if (!rs.is_positive_root(alpha))
    throw DomainError("parabolic.level_and_shape", "vector is not a positive root");
  LevelShape ls;
  ls.shape_full.assign(static_cast<std::size_t>(rs.rank), 0);
  ls.shape_on_I.reserve(f.I.size());
  for (int i : f.I) {
    std::int64_t c = alpha[static_cast<std::size_t>(i)];
    ls.level += c;
    ls.shape_on_I.push_back(c);
    ls.shape_full[static_cast<std::size_t>(i)] = c;
  }
  return ls;
}

std::vector<RootVec> elementary_set(const Facet &f,
                                    const std::vector<std::int64_t> &shape_on_I) {
  const RootSystem &rs = f.sys();
  if (shape_on_I.size() != f.I.size())
    throw ValidationError("parabolic.elementary_set",
                          "shape has " + std::to_string(shape_on_I.size()) +
                              " entries but the facet has " +
                              std::to_string(f.I.size()) + " vertices");
  bool positive = false;
  for (std::int64_t c : shape_on_I) {
    if (c < 0)
      throw DomainError("parabolic.elementary_set", "shape coefficients must be >= 0");
    positive = positive || c > 0;
  }
  if (!positive)
    throw DomainError("parabolic.elementary_set", "shape must have a positive entry");
  std::vector<RootVec> out;
  for (const RootVec &alpha : rs.positive_roots) {
    bool match = true;
    for (std::size_t k = 0; k < f.I.size() && match; ++k)
      match = alpha[static_cast<std::size_t>(f.I[k])] == shape_on_I[k];
    if (match)
      out.push_back(alpha);
  }
  return out; // positive_roots is sorted, so out is too
}

std::vector<RootVec> u_set(const Facet &f) {
  const RootSystem &rs = f.sys();
  std::vector<RootVec> out;
  for (const RootVec &alpha : rs.positive_roots) {
    std::int64_t level = 0;
    for (int i : f.I)
      level += alpha[static_cast<std::size_t>(i)];
    if (level > 0)
      out.push_back(alpha);
  }
  return out;
}

ShapeDecomposition shape_decomposition(const Facet &f) {
  ShapeDecomposition dec;
  std::map<std::pair<std::int64_t, std::vector<std::int64_t>>, std::vector<RootVec>> buckets;
  for (const RootVec &alpha : u_set(f)) {
    LevelShape ls = level_and_shape(f, alpha);
    buckets[{ls.level, ls.shape_on_I}].push_back(alpha);
  }
  for (auto &[key, roots] : buckets) {
    ShapeBlock b;
    b.level = key.first;
    b.shape_on_I = key.second;
    b.roots = std::move(roots);
    dec.total += b.roots.size();
    dec.blocks.push_back(std::move(b));
  }
  return dec;
}

FacetDims facet_dims(const Facet &f) {
  const RootSystem &rs = f.sys();
  FacetDims d;
  d.dim_g = rs.dim_g();
  d.dim_u = static_cast<int>(u_set(f).size());
  d.dim_l = d.dim_g - 2 * d.dim_u;
  d.dim_p = d.dim_l + d.dim_u;
  return d;
}

RatVec facet_vertex(const Facet &f, int i) {
  if (!std::binary_search(f.I.begin(), f.I.end(), i))
    throw DomainError("parabolic.facet_vertex",
                      "index " + std::to_string(i + 1) + " is not a vertex of the facet");
  return imat_ratvec(f.chamber.mat, f.sys().fundamental_weight(i));
}

RatVec facet_vertex_coweight(const Facet &f, int i) {
  if (!std::binary_search(f.I.begin(), f.I.end(), i))
    throw DomainError("parabolic.facet_vertex",
                      "index " + std::to_string(i + 1) + " is not a vertex of the facet");
  RatVec e(static_cast<std::size_t>(f.sys().rank), Rat(0));
  e[static_cast<std::size_t>(i)] = 1;
  return weyl_apply_covector(f.chamber, e);
}

RootVec transport_root(const Facet &f, const RootVec &alpha) {
  return imat_vec(f.chamber.mat, alpha);
}

std::vector<int> facet_vertices_1based(const Facet &f) {
  std::vector<int> out;
  out.reserve(f.I.size());
  for (int i : f.I)
    out.push_back(i + 1);
  return out;
}

} // namespace parastab
