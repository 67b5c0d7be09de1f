#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "opfp/recursions.hpp"

using namespace opfp;
using namespace opfp::testing;

TEST_CASE("g-series on the degenerate-basis family") {
  RecursionEngine eng(nonnormalizing_params());
  CHECK(eng.g1(0) == de(1, 1));
  CHECK(eng.g2(0) == de(1, 1));
  CHECK(eng.g1(1) == deq("1/2", "3/2"));
  CHECK(eng.g2(1) == de(1, 1));
  CHECK(eng.g1(2) == deq("3/4", "15/4"));
  CHECK(eng.g2(2) == deq("2", "5/2"));
}

TEST_CASE("g-series equals the pairing-sum oracle") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = random_params(rng);
    const auto fam = CumulantFamily::circular(p.alpha12, p.alpha21);
    RecursionEngine eng(p);
    for (int n = 1; n <= 5; ++n) {
      CHECK(eng.g1(n) == pairing_moment(fam, word_blocks(n, 0, 0), units(2 * n - 1)));
      Word w2;
      for (int t = 0; t < n; ++t) {
        w2.push_back(2);
        w2.push_back(1);
      }
      CHECK(eng.g2(n) == pairing_moment(fam, w2, units(2 * n - 1)));
    }
  }
}

TEST_CASE("G, G', H, H' equal the pairing-sum oracle on basis middles") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 3; ++trial) {
    const auto p = random_params(rng);
    const auto fam = CumulantFamily::circular(p.alpha12, p.alpha21);
    RecursionEngine eng(p);
    for (int n = 0; n + 0 <= 4; ++n)
      for (int k = 0; n + k <= 4; ++k)
        for (int i = 0; i < 2; ++i) {
          const DiagElement b = DiagElement::basis(2, i);
          CHECK(eng.gh(GHKind::G, n, b, k) == bf_G(fam, n, b, k));
          CHECK(eng.gh(GHKind::H, n, b, k) == bf_H(fam, n, b, k));
          if (n + k <= 3) {
            CHECK(eng.gh(GHKind::Gp, n, b, k) == bf_Gp(fam, n, b, k));
            CHECK(eng.gh(GHKind::Hp, n, b, k) == bf_Hp(fam, n, b, k));
          }
        }
  }
}

TEST_CASE("middle-block absorption identity") {
  // E((yy*)^n (y*y)^m (yy*)^k) = G(n, g2(m), k).
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 3; ++trial) {
    const auto p = random_params(rng);
    const auto fam = CumulantFamily::circular(p.alpha12, p.alpha21);
    RecursionEngine eng(p);
    for (int n = 0; n <= 4; ++n)
      for (int m = 0; n + m <= 4; ++m)
        for (int k = 0; n + m + k <= 4; ++k) {
          const Word w = word_blocks(n, m, k);
          if (w.empty()) continue;
          CHECK(pairing_moment(fam, w, units(static_cast<int>(w.size()) - 1)) ==
                eng.gh(GHKind::G, n, eng.g2(m), k));
        }
  }
}

TEST_CASE("coordinate functionals") {
  // Params with g2(1) = (2,3): P2((x,y)) = y - x, P1((x,y)) = 3x - 2y.
  LinearMapD R(2, {Scalar(1), Scalar(1), Scalar(1), Scalar(2)});
  RecursionEngine eng(CircularParams::make(Scalar::of(1, 2), R));
  REQUIRE(eng.g2(1) == de(2, 3));
  const auto f = eng.coord_functionals();
  CHECK(f.p1 == de(3, -2));
  CHECK(f.p2 == de(-1, 1));

  // Reconstruction b = P1(b) g2(0) + P2(b) g2(1) on random b.
  std::mt19937_64 rng(59);
  for (int t = 0; t < 20; ++t) {
    const DiagElement b{Scalar(rat(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 4))),
                        Scalar(rat(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 4)))};
    const auto [p1, p2] = eng.coords(b);
    CHECK(p1 * eng.g2(0) + p2 * eng.g2(1) == b);
  }

  // b = g2(0) has coordinates (1, 0).
  const auto [c1, c2] = eng.coords(DiagElement::unit(2));
  CHECK(c1.is_one());
  CHECK(c2.is_zero());
}

TEST_CASE("degenerate basis raises on the counterexample family") {
  RecursionEngine eng(nonnormalizing_params());
  CHECK(eng.g2(1) == de(1, 1));
  CHECK_THROWS_AS(eng.coord_functionals(), DegenerateBasis);
  CHECK_THROWS_AS(eng.N1(de(1, 0)), DegenerateBasis);
}

TEST_CASE("N1 is unital and linear and matches the series on normalizing instances") {
  for (auto p : {free_normalizing_identity_params(), free_normalizing_flip_params()}) {
    RecursionEngine eng(p);
    CHECK(eng.N1(DiagElement::unit(2)) == DiagElement::unit(2));
    const DiagElement b = deq("3/7", "-2"), c = de(1, 4);
    CHECK(eng.N1(b + c) == eng.N1(b) + eng.N1(c));
    for (int n = 0; n <= 5; ++n) CHECK(eng.N1(eng.g2(n)) == eng.g1(n));
  }
}

TEST_CASE("N2 choices") {
  const auto p = free_normalizing_identity_params();
  RecursionEngine eng(p);
  const DiagElement unit = DiagElement::unit(2);

  CHECK(eng.N2(N2Choice::invertible(), unit) == unit);
  CHECK(eng.N2(N2Choice::parametric(Scalar::of(1, 4), Scalar::of(2, 3)), unit) == unit);
  CHECK(eng.N2(N2Choice::parametric(Scalar(1), Scalar(1)), deq("5", "-7/3")) == deq("5", "-7/3"));

  // Invertible mode satisfies alpha12(N2(b)) = N1(alpha21(b)) identically.
  std::mt19937_64 rng(61);
  for (int t = 0; t < 10; ++t) {
    const DiagElement b{Scalar(rat(static_cast<long>(rng() % 13) - 6, 2)),
                        Scalar(rat(static_cast<long>(rng() % 13) - 6, 3))};
    CHECK(p.alpha12.apply(eng.N2(N2Choice::invertible(), b)) == eng.N1(p.alpha21.apply(b)));
  }

  // Singular alpha12 rejects the invertible route (the Case III situation).
  LinearMapD R(2, {Scalar(1), Scalar(1), Scalar(1), Scalar(1)});
  RecursionEngine sing(CircularParams::make(Scalar::of(1, 3), R));
  CHECK_THROWS_AS(sing.N2(N2Choice::invertible(), unit), SingularMap);
  CHECK_THROWS_AS(N2Choice::parametric(Scalar(2), Scalar(0)), DomainError);
}

TEST_CASE("M0 boundary identities") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 4; ++trial) {
    const auto p = random_params(rng);
    RecursionEngine eng(p);
    if (eng.g2(1)[0] == eng.g2(1)[1]) continue; // degenerate draw
    const N2Choice nc = (trial % 2 == 0 && !p.alpha12.determinant().is_zero())
                            ? N2Choice::invertible()
                            : N2Choice::parametric(Scalar(rat(1 + trial, 5)), Scalar(rat(trial, 4)));
    CHECK(eng.M0(nc, 0, 0, 0) == DiagElement::unit(2));
    for (int n = 1; n <= 4; ++n) {
      CHECK(eng.M0(nc, n, 0, 0) == eng.g1(n));
      CHECK(eng.M0(nc, 0, n, 0) == eng.g2(n));
      CHECK(eng.M0(nc, 0, 0, n) == eng.g1(n));
    }
  }
}

TEST_CASE("free normalizing instances: M0 factors and residuals vanish") {
  struct Inst {
    CircularParams p;
    Permutation theta;
    N2Choice nc;
  };
  const std::vector<Inst> instances = {
      {free_normalizing_identity_params(), perm_identity(2), N2Choice::parametric(Scalar(1), Scalar(1))},
      {free_normalizing_flip_params(), perm_flip(), N2Choice::parametric(Scalar(0), Scalar(0))},
  };
  for (const auto& inst : instances) {
    RecursionEngine eng(inst.p);
    // M0(n,m,k) = theta^{-1}(g2(n)) g2(m) theta^{-1}(g2(k)).
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= 2; ++m)
        for (int k = 0; k <= 3; ++k) {
          const DiagElement expect = apply_perm(perm_inverse(inst.theta), eng.g2(n)) * eng.g2(m) *
                                     apply_perm(perm_inverse(inst.theta), eng.g2(k));
          CHECK(eng.M0(inst.nc, n, m, k) == expect);
        }
    for (const auto triple : {std::array<int, 3>{2, 1, 1}, {2, 1, 3}, {1, 1, 3}, {3, 1, 3}})
      CHECK(eng.m_expansion_residual(inst.nc, triple[0], triple[1], triple[2]).is_zero());
    // The invertible route agrees when alpha12 is invertible.
    if (!inst.p.alpha12.determinant().is_zero())
      CHECK(eng.m_expansion_residual(N2Choice::invertible(), 2, 1, 1).is_zero());
  }
}

TEST_CASE("expansion residual vanishes structurally on the generating triples") {
  std::mt19937_64 rng(71);
  const auto p = random_params(rng);
  RecursionEngine eng(p);
  if (eng.g2(1)[0] != eng.g2(1)[1]) {
    const N2Choice nc = N2Choice::parametric(Scalar(rat(1, 3)), Scalar(rat(2, 5)));
    for (int n = 0; n <= 1; ++n)
      for (int m = 0; m <= 1; ++m)
        for (int k = 0; k <= 1; ++k)
          CHECK(eng.m_expansion_residual(nc, n, m, k).is_zero());
  }
}

TEST_CASE("inconsistent parametric choice leaves a nonzero residual") {
  // r = all ones, q = 1/3, m11 = m22 = 1/4 violates m22 = 1 - m11.
  LinearMapD R(2, {Scalar(1), Scalar(1), Scalar(1), Scalar(1)});
  RecursionEngine eng(CircularParams::make(Scalar::of(1, 3), R));
  const N2Choice nc = N2Choice::parametric(Scalar::of(1, 4), Scalar::of(1, 4));
  CHECK(!eng.m_expansion_residual(nc, 2, 1, 1).is_zero());
}

TEST_CASE("memoized values reproduce fresh evaluation") {
  const auto p = free_normalizing_flip_params();
  RecursionEngine eng1(p), eng2(p);
  const DiagElement b = deq("2/3", "-1");
  const DiagElement first = eng1.gh(GHKind::Hp, 2, b, 2);
  CHECK(first == eng1.gh(GHKind::Hp, 2, b, 2));
  CHECK(first == eng2.gh(GHKind::Hp, 2, b, 2));
}
