#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "parastab/rootsystem.hpp"

namespace parastab {

// A facet of the spherical building, i.e. a conjugacy-marked parabolic:
// the vertex set I (0-based simple root indices; empty = the full group,
// all of them = a Borel) together with a Weyl chamber marking. The
// identity chamber is the dominant one; a non-identity chamber w marks
// the facet with vertices w(lambda_i), i in I.
//
// Combinatorial data (levels, shapes, elementary sets, dimensions) depend
// only on I; the chamber matters when roots and vertices are paired with
// degree covectors or transported, and those operations apply it.
struct Facet {
  const RootSystem *rs = nullptr;
  std::vector<int> I; // sorted, unique, 0-based
  WeylElement chamber;

  const RootSystem &sys() const { return *rs; }
};

Facet make_facet(const RootSystem &rs, std::vector<int> I);
Facet make_facet(const RootSystem &rs, std::vector<int> I, WeylElement chamber);

bool facet_equal(const Facet &a, const Facet &b);
// True when both have the same vertex set (chambers may differ).
bool facet_same_type(const Facet &a, const Facet &b);

// Level sum_{i in I} n_i and shape sum_{i in I} n_i alpha_i of a positive
// root alpha = sum n_j alpha_j, relative to the facet's vertex set.
struct LevelShape {
  std::int64_t level = 0;
  std::vector<std::int64_t> shape_on_I; // n_i along sorted I
  RootVec shape_full;                   // same, embedded in root coords
};
LevelShape level_and_shape(const Facet &f, const RootVec &alpha);

// Elementary set: all roots whose shape matches the given coefficients
// along I. Only patterns with a positive entry are allowed (level > 0),
// so the members are positive roots; returned sorted.
std::vector<RootVec> elementary_set(const Facet &f,
                                    const std::vector<std::int64_t> &shape_on_I);

// The unipotent-radical root set: positive roots of positive level,
// sorted. Size = dim u.
std::vector<RootVec> u_set(const Facet &f);

// U(P) partitioned into elementary sets, grouped by (level, shape).
struct ShapeBlock {
  std::int64_t level = 0;
  std::vector<std::int64_t> shape_on_I;
  std::vector<RootVec> roots;
};
struct ShapeDecomposition {
  std::vector<ShapeBlock> blocks; // sorted by (level, shape_on_I)
  std::size_t total = 0;          // = |U(P)|
};
ShapeDecomposition shape_decomposition(const Facet &f);

struct FacetDims {
  int dim_g = 0;
  int dim_l = 0; // Levi
  int dim_p = 0; // parabolic = l + u
  int dim_u = 0; // unipotent radical
};
FacetDims facet_dims(const Facet &f);

// Chamber transport. vertex index i must lie in I.
RatVec facet_vertex(const Facet &f, int i);          // w(lambda_i), root coords
RatVec facet_vertex_coweight(const Facet &f, int i); // covector of w(lambda_i^vee)
RootVec transport_root(const Facet &f, const RootVec &alpha);

// 1-based vertex list for presentation.
std::vector<int> facet_vertices_1based(const Facet &f);

} // namespace parastab
