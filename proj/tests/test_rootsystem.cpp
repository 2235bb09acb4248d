#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <set>

#include "parastab/error.hpp"
#include "parastab/rootsystem.hpp"
#include "testutil.hpp"

using namespace parastab;

TEST_CASE("cartan matrices follow the fixed convention") {
  RootSystem a2 = build_root_system(CartanType::A, 2);
  CHECK(a2.cartan[0][0] == 2);
  CHECK(a2.cartan[0][1] == -1);
  CHECK(a2.cartan[1][0] == -1);

  // B: the last simple root is short, so the off-diagonal -2 sits in the
  // last row.
  RootSystem b2 = build_root_system(CartanType::B, 2);
  CHECK(b2.cartan[1][0] == -2);
  CHECK(b2.cartan[0][1] == -1);
  RootSystem b3 = build_root_system(CartanType::B, 3);
  CHECK(b3.cartan[2][1] == -2);
  CHECK(b3.cartan[1][2] == -1);
  CHECK(b3.cartan[0][2] == 0);

  // C: transpose of B at the tail.
  RootSystem c3 = build_root_system(CartanType::C, 3);
  CHECK(c3.cartan[1][2] == -2);
  CHECK(c3.cartan[2][1] == -1);

  // D: fork at the end of the chain.
  RootSystem d4 = build_root_system(CartanType::D, 4);
  CHECK(d4.cartan[0][1] == -1);
  CHECK(d4.cartan[1][2] == -1);
  CHECK(d4.cartan[1][3] == -1);
  CHECK(d4.cartan[0][3] == 0);
  CHECK(d4.cartan[2][3] == 0);

  RootSystem f4 = build_root_system(CartanType::F, 4);
  CHECK(f4.cartan[1][2] == -1);
  CHECK(f4.cartan[2][1] == -2);

  // G: the first simple root is short.
  RootSystem g2 = build_root_system(CartanType::G, 2);
  CHECK(g2.cartan[0][1] == -3);
  CHECK(g2.cartan[1][0] == -1);

  // E: chain 0-2-3-4-5, with node 1 hanging off node 3.
  RootSystem e6 = build_root_system(CartanType::E, 6);
  CHECK(e6.cartan[0][2] == -1);
  CHECK(e6.cartan[1][3] == -1);
  CHECK(e6.cartan[0][1] == 0);
  CHECK(e6.cartan[2][3] == -1);
  CHECK(e6.cartan[3][4] == -1);
  CHECK(e6.cartan[4][5] == -1);
}

TEST_CASE("rank validation") {
  CHECK_THROWS_AS(build_root_system(CartanType::C, 2), ValidationError);
  CHECK_THROWS_AS(build_root_system(CartanType::E, 5), ValidationError);
  CHECK_THROWS_AS(build_root_system(CartanType::G, 3), ValidationError);
  CHECK_THROWS_AS(build_root_system(CartanType::D, 3), ValidationError);
  CHECK_THROWS_AS(build_root_system(CartanType::A, 0), ValidationError);
  CHECK_THROWS_AS(build_root_system(CartanType::F, 5), ValidationError);
  try {
    build_root_system(CartanType::A, 13);
    CHECK(false);
  } catch (const ValidationError &e) {
    CHECK(std::string(e.location()) == "rootsystem.build");
    CHECK(std::string(e.what()).find("rank exceeds the supported maximum of 12") !=
          std::string::npos);
  }
  CHECK_THROWS_AS(build_root_system("X", 2), ValidationError);
  CHECK_THROWS_AS(build_root_system("AB", 2), ValidationError);
  CHECK(build_root_system("A", 2).type == CartanType::A);
}

TEST_CASE("positive root counts, dimensions, highest roots") {
  struct Row {
    CartanType t;
    int rank;
    std::size_t pos;
    int dim;
  };
  const Row rows[] = {
      {CartanType::A, 1, 1, 3},    {CartanType::A, 2, 3, 8},
      {CartanType::A, 3, 6, 15},   {CartanType::B, 2, 4, 10},
      {CartanType::B, 3, 9, 21},   {CartanType::C, 3, 9, 21},
      {CartanType::D, 4, 12, 28},  {CartanType::G, 2, 6, 14},
      {CartanType::F, 4, 24, 52},  {CartanType::E, 6, 36, 78},
  };
  for (const Row &r : rows) {
    RootSystem rs = build_root_system(r.t, r.rank);
    CHECK(rs.positive_roots.size() == r.pos);
    CHECK(rs.all_roots.size() == 2 * r.pos);
    CHECK(rs.dim_g() == r.dim);
  }

  RootSystem a2 = build_root_system(CartanType::A, 2);
  CHECK(a2.is_positive_root({1, 1}));
  CHECK(a2.is_root({-1, -1}));
  CHECK_FALSE(a2.is_root({2, 1}));
  RootSystem b2 = build_root_system(CartanType::B, 2);
  CHECK(b2.is_positive_root({1, 2}));
  RootSystem g2 = build_root_system(CartanType::G, 2);
  CHECK(g2.is_positive_root({3, 2}));
  CHECK_FALSE(g2.is_root({2, 2}));
}

TEST_CASE("symmetrizer, gram matrix and inverses") {
  RootSystem b2 = build_root_system(CartanType::B, 2);
  CHECK(b2.half_lengths[0] == Rat(1));
  CHECK(b2.half_lengths[1] == Rat(1, 2));
  RootSystem c3 = build_root_system(CartanType::C, 3);
  CHECK(c3.half_lengths[0] == Rat(1, 2));
  CHECK(c3.half_lengths[1] == Rat(1, 2));
  CHECK(c3.half_lengths[2] == Rat(1));
  RootSystem g2 = build_root_system(CartanType::G, 2);
  CHECK(g2.half_lengths[0] == Rat(1, 3));
  CHECK(g2.half_lengths[1] == Rat(1));

  for (const RootSystem &rs : testutil::roster()) {
    const std::size_t n = static_cast<std::size_t>(rs.rank);
    // gram is symmetric with diagonal 2*d_i, longest root normalized to
    // squared length 2.
    Rat maxdiag = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        CHECK(rs.gram[i][j] == rs.gram[j][i]);
      CHECK(rs.gram[i][i] == Rat(2) * rs.half_lengths[i]);
      if (rs.gram[i][i] > maxdiag)
        maxdiag = rs.gram[i][i];
    }
    CHECK(maxdiag == Rat(2));
    // gram * gram_inv and inv_cartan * cartan are identities.
    RatMat gg = mat_mul(rs.gram, rs.gram_inv);
    RatMat cartan_rat(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        cartan_rat[i][j] = Rat(static_cast<long>(rs.cartan[i][j]));
    RatMat ic = mat_mul(rs.inv_cartan, cartan_rat);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(gg[i][j] == (i == j ? Rat(1) : Rat(0)));
        CHECK(ic[i][j] == (i == j ? Rat(1) : Rat(0)));
        // all entries of gram_inv are positive for irreducible systems
        CHECK(rs.gram_inv[i][j] > 0);
      }
  }
}

TEST_CASE("fundamental weights and coweights") {
  RootSystem a2 = build_root_system(CartanType::A, 2);
  RatVec l0 = a2.fundamental_weight(0);
  CHECK(l0[0] == Rat(2, 3));
  CHECK(l0[1] == Rat(1, 3));

  for (const RootSystem &rs : testutil::roster()) {
    for (int i = 0; i < rs.rank; ++i) {
      RatVec li = rs.fundamental_weight(i);
      for (int j = 0; j < rs.rank; ++j) {
        // <lambda_i, alpha_j^vee> = delta_ij, evaluated via Cartan rows.
        Rat p = 0;
        for (int k = 0; k < rs.rank; ++k)
          p += Rat(static_cast<long>(
                   rs.cartan[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)])) *
               li[static_cast<std::size_t>(k)];
        CHECK(p == (i == j ? Rat(1) : Rat(0)));
      }
      // coweight vectors pair to delta_ij against the simple roots
      RatVec ci = rs.fundamental_coweight_vector(i);
      for (int j = 0; j < rs.rank; ++j) {
        RatVec ej(static_cast<std::size_t>(rs.rank), Rat(0));
        ej[static_cast<std::size_t>(j)] = 1;
        CHECK(bilinear(rs, ci, ej) == (i == j ? Rat(1) : Rat(0)));
      }
    }
  }
}

TEST_CASE("coroot pairing") {
  RootSystem b2 = build_root_system(CartanType::B, 2);
  // <alpha_0, alpha_1^vee> for the long root against the short coroot.
  CHECK(pair_coroot(b2, {1, 0}, {0, 1}) == Rat(-2));
  CHECK(pair_coroot(b2, {0, 1}, {1, 0}) == Rat(-1));
  CHECK_THROWS_AS(pair_coroot(b2, {1, 0}, {2, 1}), DomainError);
  // coroot of the short root (0,1): alpha / d with d = 1/2.
  RatVec cv = coroot_vector(b2, {0, 1});
  CHECK(cv[0] == Rat(0));
  CHECK(cv[1] == Rat(2));
  CHECK_THROWS_AS(bilinear(b2, RatVec{Rat(1)}, RatVec{Rat(1), Rat(0)}),
                  ValidationError);
}

TEST_CASE("simple reflections and weyl words") {
  RootSystem a2 = build_root_system(CartanType::A, 2);
  for (int i = 0; i < 2; ++i) {
    const IMat &s = a2.simple_reflections[static_cast<std::size_t>(i)];
    RootVec alpha(2, 0);
    alpha[static_cast<std::size_t>(i)] = 1;
    RootVec moved = imat_vec(s, alpha);
    CHECK(moved[static_cast<std::size_t>(i)] == -1);
    CHECK(imat_mul(s, s) == IMat::identity(2));
  }
  // braid relation s0 s1 s0 = s1 s0 s1
  IMat lhs = imat_mul(a2.simple_reflections[0],
                      imat_mul(a2.simple_reflections[1], a2.simple_reflections[0]));
  IMat rhs = imat_mul(a2.simple_reflections[1],
                      imat_mul(a2.simple_reflections[0], a2.simple_reflections[1]));
  CHECK(lhs == rhs);

  RootSystem g2 = build_root_system(CartanType::G, 2);
  IMat prod = IMat::identity(2);
  for (int k = 0; k < 6; ++k)
    prod = imat_mul(prod, imat_mul(g2.simple_reflections[0], g2.simple_reflections[1]));
  CHECK(prod == IMat::identity(2));

  CHECK_THROWS_AS(weyl_from_word(a2, {2}), ValidationError);
  CHECK_THROWS_AS(weyl_from_word(a2, {-1}), ValidationError);
  WeylElement cancel = weyl_from_word(a2, {0, 0});
  CHECK(cancel.word.empty());
  CHECK(cancel.mat == IMat::identity(2));

  // longest element of A2 gets the lex-least reduced word
  WeylElement w0 = weyl_from_word(a2, {1, 0, 1});
  CHECK(w0.word == std::vector<int>{0, 1, 0});

  WeylElement w = weyl_from_word(a2, {0, 1});
  WeylElement wi = weyl_inverse(w);
  CHECK(weyl_mul(a2, w, wi).mat == IMat::identity(2));
  CHECK(weyl_mul(a2, wi, w).mat == IMat::identity(2));
}

TEST_CASE("reduced word recovery rejects non-weyl matrices") {
  RootSystem d4 = build_root_system(CartanType::D, 4);
  // Diagram rotation 0 -> 2 -> 3 -> 0 fixing 1: permutes the simple
  // roots (hence all roots) but is not in the Weyl group.
  IMat rot = IMat::identity(4);
  for (auto &x : rot.a)
    x = 0;
  auto set = [&](int r, int c) { rot.a[static_cast<std::size_t>(r) * 4 + c] = 1; };
  set(2, 0); // image of alpha_0 is alpha_2
  set(1, 1);
  set(3, 2);
  set(0, 3);
  try {
    reduced_word_lex_least(d4, rot);
    CHECK(false);
  } catch (const DomainError &e) {
    CHECK(std::string(e.what()).find("permutes the roots but is not a Weyl group element") !=
          std::string::npos);
  }

  RootSystem a2 = build_root_system(CartanType::A, 2);
  IMat twice = IMat::identity(2);
  twice.a = {2, 0, 0, 2};
  CHECK_THROWS_AS(reduced_word_lex_least(a2, twice), DomainError);
  IMat sing = IMat::identity(2);
  sing.a = {1, 1, 0, 0}; // columns (1,0) and (1,0): singular but root columns
  CHECK_THROWS_AS(reduced_word_lex_least(a2, sing), DomainError);

  // round trip: every element of the A2 group recovers its own word
  WeylGroup wg = enumerate_weyl(a2);
  for (const WeylElement &el : wg.elements)
    CHECK(reduced_word_lex_least(a2, el.mat) == el.word);
}

TEST_CASE("covector transport") {
  auto rng = testutil::make_rng();
  for (const RootSystem &rs : testutil::roster()) {
    for (int trial = 0; trial < 5; ++trial) {
      WeylElement w = testutil::random_weyl(rng, rs);
      RatVec f = testutil::random_ratvec(rng, static_cast<std::size_t>(rs.rank));
      RatVec wf = weyl_apply_covector(w, f);
      for (const RootVec &alpha : rs.positive_roots) {
        RootVec moved = imat_vec(w.mat, alpha);
        CHECK(covector_on_root(wf, moved) == covector_on_root(f, alpha));
      }
    }
  }
}

TEST_CASE("weyl group enumeration") {
  for (const RootSystem &rs : testutil::roster()) {
    WeylGroup wg = enumerate_weyl(rs);
    CHECK(wg.elements.size() == weyl_order(rs.type, rs.rank));
    CHECK(wg.elements[0].mat == IMat::identity(rs.rank));
    CHECK(wg.elements[0].word.empty());
    std::set<IMat> distinct;
    for (const WeylElement &el : wg.elements)
      distinct.insert(el.mat);
    CHECK(distinct.size() == wg.elements.size());
  }
  CHECK(weyl_order(CartanType::A, 3) == 24);
  CHECK(weyl_order(CartanType::B, 3) == 48);
  CHECK(weyl_order(CartanType::C, 3) == 48);
  CHECK(weyl_order(CartanType::D, 4) == 192);
  CHECK(weyl_order(CartanType::E, 6) == 51840);
  CHECK(weyl_order(CartanType::F, 4) == 1152);
  CHECK(weyl_order(CartanType::G, 2) == 12);

  RootSystem b3 = build_root_system(CartanType::B, 3);
  CHECK_THROWS_AS(enumerate_weyl(b3, 10), ResourceError);
}

TEST_CASE("weyl cap environment override") {
  RootSystem a3 = build_root_system(CartanType::A, 3);
  setenv("PARASTAB_WEYL_CAP", "5", 1);
  CHECK_THROWS_AS(enumerate_weyl(a3), ResourceError);
  setenv("PARASTAB_WEYL_CAP", "12x", 1);
  CHECK_THROWS_AS(enumerate_weyl(a3), ValidationError);
  unsetenv("PARASTAB_WEYL_CAP");
  CHECK(enumerate_weyl(a3).elements.size() == 24);
}

TEST_CASE("weyl orbits") {
  RootSystem a2 = build_root_system(CartanType::A, 2);
  std::vector<RatVec> orb = weyl_orbit(a2, a2.fundamental_weight(0));
  CHECK(orb.size() == 3);
  CHECK(std::is_sorted(orb.begin(), orb.end()));
  std::vector<RatVec> orb_hr = weyl_orbit(a2, RatVec{Rat(1), Rat(1)});
  CHECK(orb_hr.size() == 6);
  bool found = false;
  for (const RatVec &v : orb_hr)
    if (v == RatVec{Rat(1), Rat(1)})
      found = true;
  CHECK(found);
  CHECK_THROWS_AS(weyl_orbit(a2, RatVec{Rat(1), Rat(1)}, 3), ResourceError);
}

TEST_CASE("product systems") {
  ProductRootSystem prod =
      build_product_system({{CartanType::A, 1}, {CartanType::A, 1}});
  CHECK(prod.rank() == 2);
  CHECK(prod.dim_g() == 6);
  CHECK(prod.positive_count() == 2);
  CHECK_THROWS_AS(build_product_system({}), ValidationError);
}

TEST_CASE("names") {
  CHECK(build_root_system(CartanType::A, 2).name() == "A2");
  CHECK(build_root_system(CartanType::G, 2).name() == "G2");
  CHECK(cartan_type_char(CartanType::D) == 'D');
  CHECK(cartan_type_from_char('F') == CartanType::F);
  CHECK_THROWS_AS(cartan_type_from_char('H'), ValidationError);
}
