#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parastab/error.hpp"
#include "parastab/frobdynamics.hpp"
#include "testutil.hpp"

using namespace parastab;

TEST_CASE("cone angle extremes, rank 1 and 2") {
  RootSystem a1 = build_root_system(CartanType::A, 1);
  S0Result r1 = s0_estimate(a1);
  CHECK(r1.value == Rat(-1));
  CHECK(r1.exact);
  CHECK(r1.sign == -1);
  CHECK(r1.cos_sq == Rat(1));
  CHECK(r1.cos_sq_exact);
  CHECK_FALSE(r1.witness.empty());

  RootSystem a2 = build_root_system(CartanType::A, 2);
  S0Result r2 = s0_estimate(a2);
  CHECK(r2.value == Rat(1, 2));
  CHECK(r2.exact);
  CHECK(r2.sign == 1);
  CHECK(r2.cos_sq == Rat(1, 4));
  CHECK(r2.cos_sq_exact);

  // B2 and G2 have irrational extremal cosines: the squared cosine is
  // exact, the value is a certified dyadic upper bound below 1.
  RootSystem b2 = build_root_system(CartanType::B, 2);
  S0Result rb = s0_estimate(b2);
  CHECK_FALSE(rb.exact);
  CHECK(rb.cos_sq == Rat(1, 2));
  CHECK(rb.cos_sq_exact);
  CHECK(rb.sign == 1);
  CHECK(rb.value * rb.value >= Rat(1, 2));
  CHECK(rb.value < Rat(1));

  RootSystem g2 = build_root_system(CartanType::G, 2);
  S0Result rg = s0_estimate(g2);
  CHECK_FALSE(rg.exact);
  CHECK(rg.cos_sq == Rat(3, 4));
  CHECK(rg.cos_sq_exact);
  CHECK(rg.sign == 1);
  CHECK(rg.value * rg.value >= Rat(3, 4));
  CHECK(rg.value < Rat(1));
}

TEST_CASE("cone angle kernels agree and the cap guards rank") {
  for (const char *name : {"A1", "A2", "B2", "G2", "A3"}) {
    RootSystem rs = build_root_system(std::string(1, name[0]), name[1] - '0');
    S0Result s = s0_estimate_serial(rs);
    S0Result p = s0_estimate_parallel(rs);
    CHECK(s.value == p.value);
    CHECK(s.exact == p.exact);
    CHECK(s.sign == p.sign);
    CHECK(s.cos_sq == p.cos_sq);
    CHECK(s.cos_sq_exact == p.cos_sq_exact);
    CHECK(s.value < Rat(1));
  }

  RootSystem d4 = build_root_system(CartanType::D, 4);
  CHECK_THROWS_AS(s0_estimate(d4), ResourceError);
  RootSystem a3 = build_root_system(CartanType::A, 3);
  CHECK_THROWS_AS(s0_estimate(a3, 2), ResourceError);
}

TEST_CASE("marked facet matching") {
  RootSystem a2 = build_root_system(CartanType::A, 2);
  Facet p = make_facet(a2, {0});
  Facet q = make_facet(a2, {0}, weyl_from_word(a2, {1}));
  std::optional<WeylElement> sigma = match_facets(p, q);
  REQUIRE(sigma.has_value());
  CHECK(sigma->word == std::vector<int>{1});

  // sigma carries the vertices of p onto the vertices of q
  for (int i : p.I)
    CHECK(imat_ratvec(sigma->mat, facet_vertex(p, i)) == facet_vertex(q, i));

  CHECK_FALSE(match_facets(p, make_facet(a2, {1})).has_value());

  RootSystem b2 = build_root_system(CartanType::B, 2);
  CHECK_THROWS_AS(match_facets(p, make_facet(b2, {0})), ValidationError);

  // random round trips
  auto rng = testutil::make_rng(37);
  for (const RootSystem &rs : testutil::roster()) {
    for (int trial = 0; trial < 4; ++trial) {
      WeylElement wp = testutil::random_weyl(rng, rs);
      WeylElement wq = testutil::random_weyl(rng, rs);
      for (const std::vector<int> &I : testutil::vertex_subsets(rs.rank, true)) {
        Facet fp = make_facet(rs, I, wp);
        Facet fq = make_facet(rs, I, wq);
        std::optional<WeylElement> s = match_facets(fp, fq);
        REQUIRE(s.has_value());
        for (int i : I)
          CHECK(imat_ratvec(s->mat, facet_vertex(fp, i)) == facet_vertex(fq, i));
        break; // one subset per trial is enough for the transport check
      }
    }
  }
}

TEST_CASE("norm expansion") {
  RootSystem a1 = build_root_system(CartanType::A, 1);
  InvariantProfile p1 = make_profile(make_facet(a1, {0}), {{0, Rat(1)}});
  CHECK(y_norm_expand(p1) == Rat(1, 2));

  RootSystem a2 = build_root_system(CartanType::A, 2);
  InvariantProfile p2 = make_profile(make_facet(a2, {0}), {{0, Rat(5)}});
  CHECK(y_norm_expand(p2) == Rat(25, 6));

  // expansion matches the bilinear square of the balance covector
  auto rng = testutil::make_rng(41);
  for (const RootSystem &rs : testutil::roster()) {
    for (int trial = 0; trial < 10; ++trial) {
      for (const std::vector<int> &I : testutil::vertex_subsets(rs.rank, true)) {
        Facet f = make_facet(rs, I, testutil::random_weyl(rng, rs));
        std::map<int, Rat> n;
        for (int i : I)
          n[i] = testutil::random_rat(rng);
        InvariantProfile prof = make_profile(f, n);
        RatVec y = y_covector(prof);
        CHECK(y_norm_expand(prof) == bilinear_covector(rs, y, y));
      }
    }
  }
}

namespace {

// The rank-1 two-chamber pair: same vertex set, opposite chambers.
struct TwoChamber {
  RootSystem rs = build_root_system(CartanType::A, 1);
  InvariantProfile prof_p, prof_q;
  WeylElement sigma;

  TwoChamber() {
    Facet p = make_facet(rs, {0});
    Facet q = make_facet(rs, {0}, weyl_from_word(rs, {0}));
    prof_p = make_profile(p, {{0, Rat(1)}});
    prof_q = make_profile(q, {{0, Rat(1)}});
    sigma = *match_facets(p, q);
  }
};

} // namespace

TEST_CASE("contradiction certificates") {
  TwoChamber tc;

  // small epsilon: the window inequality fails, so the two facets cannot
  // both be canonical -- rejected
  Certificate rej = contradiction_certificate(tc.prof_p, tc.prof_q, tc.sigma,
                                              Rat(1, 10), Rat(-1));
  CHECK(rej.verdict == Certificate::Verdict::Reject);
  CHECK(rej.violated == "1 <= s0*(1+epsilon)");
  CHECK(rej.norm_p_sq == Rat(1, 2));
  CHECK(rej.norm_q_sq == Rat(1, 2));
  CHECK(rej.growth_ok);
  CHECK_FALSE(rej.pairing_ok);
  CHECK_FALSE(rej.facets_equal);
  CHECK_FALSE(rej.window_ok);

  // large epsilon with positive s0: window holds, nothing is forced
  Certificate warn = contradiction_certificate(tc.prof_p, tc.prof_q, tc.sigma,
                                               Rat(3, 2), Rat(1, 2));
  CHECK(warn.verdict == Certificate::Verdict::AcceptWithWarning);
  CHECK(warn.warning == "epsilon too large to force a contradiction");
  CHECK(warn.window_ok);

  // equal facets always accept
  Certificate acc = contradiction_certificate(tc.prof_p, tc.prof_p,
                                              weyl_identity(tc.rs), Rat(1, 10),
                                              Rat(-1));
  CHECK(acc.verdict == Certificate::Verdict::Accept);
  CHECK(acc.facets_equal);
  CHECK(acc.pairing_ok);
}

TEST_CASE("certificate validation") {
  TwoChamber tc;

  // epsilon must be positive
  CHECK_THROWS_AS(contradiction_certificate(tc.prof_p, tc.prof_q, tc.sigma,
                                            Rat(0), Rat(-1)),
                  ValidationError);

  // identity does not carry P onto Q here
  CHECK_THROWS_AS(contradiction_certificate(tc.prof_p, tc.prof_q,
                                            weyl_identity(tc.rs), Rat(1, 10),
                                            Rat(-1)),
                  DomainError);

  // vertex sets must agree
  RootSystem a2 = build_root_system(CartanType::A, 2);
  InvariantProfile pa = make_profile(make_facet(a2, {0}), {{0, Rat(1)}});
  InvariantProfile pb = make_profile(make_facet(a2, {1}), {{1, Rat(1)}});
  try {
    contradiction_certificate(pa, pb, weyl_identity(a2), Rat(1, 10), Rat(1, 2));
    CHECK(false);
  } catch (const DomainError &e) {
    CHECK(std::string(e.what()).find("vertex sets differ") != std::string::npos);
  }

  // profiles over different root systems
  RootSystem a1 = build_root_system(CartanType::A, 1);
  InvariantProfile p1 = make_profile(make_facet(a1, {0}), {{0, Rat(1)}});
  CHECK_THROWS_AS(contradiction_certificate(p1, pa, weyl_identity(a1), Rat(1, 10),
                                            Rat(1, 2)),
                  ValidationError);

  // the vertexwise inequality (*) gates everything
  InvariantProfile big = make_profile(make_facet(tc.rs, {0}), {{0, Rat(2)}});
  try {
    contradiction_certificate(big, tc.prof_q, tc.sigma, Rat(1, 10), Rat(-1));
    CHECK(false);
  } catch (const ValidationError &e) {
    CHECK(std::string(e.what()).find("inequality (*) fails at vertex 1") !=
          std::string::npos);
  }

  // negative invariants are rejected before any arithmetic
  InvariantProfile neg = make_profile(make_facet(tc.rs, {0}), {{0, Rat(-1)}});
  CHECK_THROWS_AS(contradiction_certificate(neg, tc.prof_q, tc.sigma, Rat(1, 10),
                                            Rat(-1)),
                  DomainError);
}

TEST_CASE("invariant sequence validation") {
  RootSystem a1 = build_root_system(CartanType::A, 1);
  Facet f = make_facet(a1, {0});
  auto entry = [&](long long k, Rat n) {
    InvariantSequence::Entry e;
    e.k = k;
    e.facet = f;
    e.n = {n};
    return e;
  };

  CHECK_THROWS_AS(make_invariant_sequence(1, {entry(0, Rat(1))}), ValidationError);
  CHECK_THROWS_AS(make_invariant_sequence(2, {}), ValidationError);
  CHECK_THROWS_AS(make_invariant_sequence(2, {entry(-1, Rat(1))}), ValidationError);
  CHECK_THROWS_AS(make_invariant_sequence(2, {entry(0, Rat(1)), entry(0, Rat(2))}),
                  ValidationError);

  InvariantSequence::Entry wrong = entry(0, Rat(1));
  wrong.n = {Rat(1), Rat(2)};
  CHECK_THROWS_AS(make_invariant_sequence(2, {wrong}), ValidationError);

  RootSystem other = build_root_system(CartanType::A, 2);
  InvariantSequence::Entry alien;
  alien.k = 1;
  alien.facet = make_facet(other, {0});
  alien.n = {Rat(1)};
  CHECK_THROWS_AS(make_invariant_sequence(2, {entry(0, Rat(1)), alien}),
                  ValidationError);
}

TEST_CASE("stabilization detection") {
  RootSystem a1 = build_root_system(CartanType::A, 1);
  Facet f = make_facet(a1, {0});
  auto entry = [&](long long k, std::vector<Rat> n, const Facet &fac) {
    InvariantSequence::Entry e;
    e.k = k;
    e.facet = fac;
    e.n = std::move(n);
    return e;
  };

  // n_k = p^k: normalized sequence is constant, first pair qualifies
  InvariantSequence s1 = make_invariant_sequence(
      2, {entry(0, {Rat(1)}, f), entry(1, {Rat(2)}, f), entry(2, {Rat(4)}, f)});
  auto r1 = detect_stabilization(s1, Rat(1, 10));
  REQUIRE(r1.has_value());
  CHECK(*r1 == std::pair<std::size_t, std::size_t>{0, 1});

  // two-vertex profile within tolerance
  RootSystem a2 = build_root_system(CartanType::A, 2);
  Facet borel = make_facet(a2, {0, 1});
  InvariantSequence s2 = make_invariant_sequence(
      2, {entry(0, {Rat(2), Rat(1)}, borel), entry(1, {Rat(3), Rat(2)}, borel)});
  auto r2 = detect_stabilization(s2, Rat(1, 10));
  REQUIRE(r2.has_value());
  CHECK(*r2 == std::pair<std::size_t, std::size_t>{0, 1});

  // growth faster than p^k at every step: no pair
  InvariantSequence s3 = make_invariant_sequence(
      2, {entry(0, {Rat(1)}, f), entry(1, {Rat(3)}, f), entry(2, {Rat(10)}, f)});
  CHECK_FALSE(detect_stabilization(s3, Rat(1, 10)).has_value());

  // every facet occurs once: nothing to compare
  Facet other = make_facet(a2, {0});
  Facet third = make_facet(a2, {1});
  InvariantSequence s4 = make_invariant_sequence(
      2, {entry(0, {Rat(1), Rat(1)}, borel), entry(1, {Rat(1)}, other),
          entry(2, {Rat(1)}, third)});
  CHECK_FALSE(detect_stabilization(s4, Rat(1, 10)).has_value());

  // indices are reported against the original sequence, not the group
  InvariantSequence s5 = make_invariant_sequence(
      2, {entry(0, {Rat(5), Rat(5)}, borel), entry(1, {Rat(2)}, other),
          entry(2, {Rat(4)}, other)});
  auto r5 = detect_stabilization(s5, Rat(1, 10));
  REQUIRE(r5.has_value());
  CHECK(*r5 == std::pair<std::size_t, std::size_t>{1, 2});

  CHECK_THROWS_AS(detect_stabilization(s1, Rat(0)), ValidationError);
  CHECK_THROWS_AS(detect_stabilization(s1, Rat(-1)), ValidationError);
}
