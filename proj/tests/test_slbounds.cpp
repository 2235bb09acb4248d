#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "parastab/error.hpp"
#include "parastab/hnpolygon.hpp"
#include "parastab/slbounds.hpp"
#include "testutil.hpp"

using namespace parastab;

TEST_CASE("dominant weight construction and degree") {
  DominantWeightSL w = make_weight_sl(2, {1});
  CHECK(weight_degree(w) == 1);
  CHECK(weight_degree(make_weight_sl(3, {1, 1})) == 3);
  CHECK(weight_degree(make_weight_sl(4, {2, 0, 1})) == 5);

  CHECK_THROWS_AS(make_weight_sl(1, {}), ValidationError);
  CHECK_THROWS_AS(make_weight_sl(3, {1}), ValidationError);
  CHECK_THROWS_AS(make_weight_sl(3, {1, -1}), ValidationError);

  // degree is additive in the multiplicities
  auto rng = testutil::make_rng(43);
  std::uniform_int_distribution<std::int64_t> mult(0, 5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::int64_t> a(3), b(3), sum(3);
    for (int i = 0; i < 3; ++i) {
      a[i] = mult(rng);
      b[i] = mult(rng);
      sum[i] = a[i] + b[i];
    }
    CHECK(weight_degree(make_weight_sl(4, sum)) ==
          weight_degree(make_weight_sl(4, a)) + weight_degree(make_weight_sl(4, b)));
  }
}

TEST_CASE("composition series degree") {
  CHECK(jh_degree({make_weight_sl(3, {1, 0})}) == 1);
  CHECK(jh_degree({make_weight_sl(3, {1, 0}), make_weight_sl(3, {0, 1})}) == 2);
  CHECK(jh_degree({make_weight_sl(3, {1, 1}), make_weight_sl(3, {2, 0})}) == 3);

  CHECK_THROWS_AS(jh_degree({}), ValidationError);
  try {
    jh_degree({make_weight_sl(3, {1, 0}), make_weight_sl(4, {1, 0, 0})});
    CHECK(false);
  } catch (const ValidationError &e) {
    CHECK(std::string(e.what()).find("different groups") != std::string::npos);
  }

  // adding weights never lowers the maximum
  std::vector<DominantWeightSL> ws{make_weight_sl(3, {1, 0})};
  std::int64_t prev = jh_degree(ws);
  ws.push_back(make_weight_sl(3, {0, 1}));
  CHECK(jh_degree(ws) >= prev);
}

TEST_CASE("module slope window") {
  auto [lo, hi] = module_bound_82(2, Rat(1, 2), Rat(-1, 2));
  CHECK(lo == Rat(-1));
  CHECK(hi == Rat(1));

  CHECK_THROWS_AS(module_bound_82(-1, Rat(1), Rat(0)), ValidationError);
  CHECK_THROWS_AS(module_bound_82(2, Rat(0), Rat(1)), ValidationError); // empty window

  auto rng = testutil::make_rng(47);
  std::uniform_int_distribution<std::int64_t> jh(0, 10);
  for (int trial = 0; trial < 50; ++trial) {
    Rat a = testutil::random_rat(rng);
    Rat b = testutil::random_rat(rng);
    if (a < b)
      std::swap(a, b);
    auto [l, h] = module_bound_82(jh(rng), a, b);
    CHECK(l <= h);
  }
}

TEST_CASE("representation bound") {
  CHECK(rep_bound_83(3, 4, Rat(5), 7) == Rat(40, 7));
  CHECK(rep_bound_83(2, 1, Rat(1), 2) == Rat(1, 2));

  CHECK_THROWS_AS(rep_bound_83(1, 4, Rat(5), 7), ValidationError);
  CHECK_THROWS_AS(rep_bound_83(3, -1, Rat(5), 7), ValidationError);
  CHECK_THROWS_AS(rep_bound_83(3, 4, Rat(5), 1), ValidationError);
  try {
    rep_bound_83(3, 4, Rat(0), 7);
    CHECK(false);
  } catch (const HypothesisError &e) {
    CHECK(std::string(e.what()).find("positive slope gap") != std::string::npos);
  }
  CHECK_THROWS_AS(rep_bound_83(3, 4, Rat(-2), 7), HypothesisError);
}

TEST_CASE("bound composition is consistent") {
  // the one-step representation bound equals the module window applied
  // to the tower-limit slope bound when the base slope is zero
  CHECK(rep_bound_83(3, 4, Rat(5), 7) ==
        module_bound_82(4, lmax_bound(3, 7, Rat(0), Rat(5)), Rat(0)).second);

  auto rng = testutil::make_rng(53);
  std::uniform_int_distribution<std::int64_t> dim(2, 9), jh(0, 6);
  std::uniform_int_distribution<long> prime(2, 11), lnum(1, 9);
  for (int trial = 0; trial < 100; ++trial) {
    std::int64_t v = dim(rng), j = jh(rng);
    long p = prime(rng);
    Rat l(lnum(rng), lnum(rng));
    l.canonicalize();
    CHECK(rep_bound_83(v, j, l, p) ==
          module_bound_82(j, lmax_bound(v, p, Rat(0), l), Rat(0)).second);
  }
}

TEST_CASE("lattice functional extension") {
  LatticeFunctional f =
      extend_functional(2, {{2, 0}, {0, 1}}, {3, 1});
  CHECK(f.extension == RatVec{Rat(3, 2), Rat(1)});
  CHECK(f.index == 2);

  LatticeFunctional id2 = extend_functional(2, {{1, 0}, {0, 1}}, {7, -4});
  CHECK(id2.extension == RatVec{Rat(7), Rat(-4)});
  CHECK(id2.index == 1);

  LatticeFunctional skew = extend_functional(2, {{1, 1}, {1, -1}}, {2, 0});
  CHECK(skew.extension == RatVec{Rat(1), Rat(1)});
  CHECK(skew.index == 2);

  CHECK_THROWS_AS(extend_functional(0, {}, {}), ValidationError);
  CHECK_THROWS_AS(extend_functional(2, {{1, 0}}, {1}), ValidationError);
  CHECK_THROWS_AS(extend_functional(2, {{1, 0}, {0}}, {1, 2}), ValidationError);
  CHECK_THROWS_AS(extend_functional(2, {{1, 0}, {0, 1}}, {1}), ValidationError);
  try {
    extend_functional(2, {{1, 1}, {2, 2}}, {1, 2});
    CHECK(false);
  } catch (const ValidationError &e) {
    CHECK(std::string(e.what()).find("linearly dependent") != std::string::npos);
  }

  // round trip: the extension reproduces the prescribed values, and
  // index * extension is integral
  auto rng = testutil::make_rng(59);
  std::uniform_int_distribution<std::int64_t> coeff(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3;
    std::vector<std::vector<std::int64_t>> basis(n, std::vector<std::int64_t>(n));
    std::vector<std::int64_t> values(n);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i)
        basis[j][i] = coeff(rng);
      values[j] = coeff(rng);
    }
    LatticeFunctional lf;
    try {
      lf = extend_functional(n, basis, values);
    } catch (const ValidationError &) {
      continue; // random singular basis
    }
    for (int j = 0; j < n; ++j) {
      Rat pairing = 0;
      for (int i = 0; i < n; ++i)
        pairing += lf.extension[static_cast<std::size_t>(i)] *
                   Rat(static_cast<long>(basis[static_cast<std::size_t>(j)]
                                              [static_cast<std::size_t>(i)]));
      CHECK(pairing == Rat(static_cast<long>(values[static_cast<std::size_t>(j)])));
    }
    for (const Rat &x : lf.extension) {
      Rat scaled = x * Rat(lf.index);
      CHECK(scaled.get_den() == 1);
    }
  }
}
