#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "opfp/cumulants.hpp"

using namespace opfp;
using namespace opfp::testing;

TEST_CASE("hat_alpha peels interval blocks per the recursion") {
  const auto p = nonnormalizing_params();
  const auto fam = CumulantFamily::circular(p.alpha12, p.alpha21);
  const DiagElement b1 = deq("1/2", "3"), b2 = de(1, 0), b3 = deq("2", "-1/5");
  const Word j = word_from_string("1212");

  // Full partition: alpha_j directly (zero map for a circular family).
  NCPartition full{4, {{1, 2, 3, 4}}};
  CHECK(hat_alpha(full, j, {b1, b2, b3}, fam).is_zero());

  NCPartition adjacent{4, {{1, 2}, {3, 4}}};
  CHECK(hat_alpha(adjacent, j, {b1, b2, b3}, fam) ==
        p.alpha12.apply(b1) * b2 * p.alpha12.apply(b3));

  NCPartition nested{4, {{1, 4}, {2, 3}}};
  CHECK(hat_alpha(nested, j, {b1, b2, b3}, fam) ==
        p.alpha12.apply(b1 * p.alpha21.apply(b2) * b3));

  CHECK_THROWS_AS(hat_alpha(nested, j, {b1, b2}, fam), ArityMismatch);
}

TEST_CASE("moment-cumulant formula golden values") {
  const auto p = nonnormalizing_params();
  const auto fam = CumulantFamily::circular(p.alpha12, p.alpha21);

  // One partition only at length 2.
  CHECK(moment_from_cumulants(fam, word_from_string("12"), {DiagElement::unit(2)}) ==
        p.alpha12.apply(DiagElement::unit(2)));

  // E(a a* b a a*) with b = (1,0): the two pairings give (1/2, 1/4).
  const DiagElement val = moment_from_cumulants(
      fam, word_from_string("1212"), {DiagElement::unit(2), de(1, 0), DiagElement::unit(2)});
  CHECK(val == deq("1/2", "1/4"));

  // Odd length: no pairing covers the word.
  CHECK(moment_from_cumulants(fam, word_from_string("121"), units(2)).is_zero());
  CHECK(moment_from_cumulants(fam, word_from_string("21221"), units(4)).is_zero());
}

TEST_CASE("circular moments vanish off balanced even words") {
  std::mt19937_64 eng(17);
  const auto p = random_params(eng);
  const auto fam = CumulantFamily::circular(p.alpha12, p.alpha21);
  for (int len = 1; len <= 5; ++len) {
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
      Word j;
      int ones = 0;
      for (int t = 0; t < len; ++t) {
        const bool is_a = (mask >> t) & 1;
        ones += is_a;
        j.push_back(is_a ? 1 : 2);
      }
      if (2 * ones == len) continue;
      for (int c = 0; c < (len >= 2 ? 2 : 1); ++c) {
        std::vector<DiagElement> bargs;
        for (int t = 0; t < len - 1; ++t) bargs.push_back(DiagElement::basis(2, (t + c) % 2));
        CHECK(moment_from_cumulants(fam, j, bargs).is_zero());
      }
    }
  }
}

TEST_CASE("circular_family validates positivity") {
  const auto p = nonnormalizing_params();
  CHECK_NOTHROW(CumulantFamily::circular(LinearMapD::identity(2), LinearMapD::identity(2)));
  CHECK_NOTHROW(CumulantFamily::circular(p.alpha12, p.alpha21));
  LinearMapD bad = LinearMapD::identity(2);
  bad.at(0, 1) = Scalar(-1);
  CHECK_THROWS_AS(CumulantFamily::circular(bad, LinearMapD::identity(2)), DomainError);
}

TEST_CASE("cumulants_from_moments round-trips circular families") {
  std::mt19937_64 eng(23);
  for (int trial = 0; trial < 3; ++trial) {
    const auto p = random_params(eng);
    const auto fam = CumulantFamily::circular(p.alpha12, p.alpha21);
    const CumulantModel model(fam);
    const auto recovered = cumulants_from_moments(model, 5);
    CHECK(recovered.maps().size() == fam.maps().size());
    for (const auto& [word, m] : fam.maps()) {
      const auto* r = recovered.find(word);
      REQUIRE(r != nullptr);
      CHECK(*r == m);
    }
  }
}

TEST_CASE("cumulants of the zero element vanish") {
  const ConstantModel zero(DiagElement(2));
  const auto fam = cumulants_from_moments(zero, 4);
  CHECK(fam.maps().empty());
}

TEST_CASE("traciality checks") {
  const auto p = nonnormalizing_params();
  CHECK(check_traciality(TraceWeights::uniform(2), p.alpha12, p.alpha21));

  LinearMapD ones(2, {Scalar(1), Scalar(1), Scalar(1), Scalar(1)});
  CHECK(check_traciality(TraceWeights::uniform(2), ones, ones));

  // tau(alpha12(e1) e2) = x1 x2 / 4 + x1 y2 / 4 + y1 y2 / 2 on both sides.
  const auto defects = traciality_defects(TraceWeights::uniform(2), p.alpha12, p.alpha21);
  for (const auto& s : defects) CHECK(s.is_zero());

  // Violate one selim relation: q r12 != (1-q) s21.
  LinearMapD a12(2, {Scalar(1), Scalar(2), Scalar(0), Scalar(1)});
  LinearMapD a21(2, {Scalar(1), Scalar(0), Scalar(3), Scalar(1)});
  CHECK(!check_traciality(TraceWeights({Scalar(rat(1, 3)), Scalar(rat(2, 3))}), a12, a21));
}

TEST_CASE("word-level trace property follows from the selim relations") {
  std::mt19937_64 eng(29);
  const auto p = random_params(eng);
  const auto fam = CumulantFamily::circular(p.alpha12, p.alpha21);
  const TraceWeights w = TraceWeights::two_point(p.q);
  // tau E is invariant under one-step rotation of coefficiented words.
  for (int len = 2; len <= 4; ++len) {
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
      Word j;
      for (int t = 0; t < len; ++t) j.push_back(((mask >> t) & 1) ? 1 : 2);
      for (unsigned cmask = 0; cmask < (1u << len); ++cmask) {
        std::vector<DiagElement> coeffs; // after each letter, cyclically
        for (int t = 0; t < len; ++t) coeffs.push_back(DiagElement::basis(2, (cmask >> t) & 1));
        std::vector<DiagElement> inner(coeffs.begin(), coeffs.end() - 1);
        const Scalar lhs = trace(w, coeffs.back() * moment_from_cumulants(fam, j, inner));
        Word jr(j.begin() + 1, j.end());
        jr.push_back(j.front());
        std::vector<DiagElement> innerr(coeffs.begin() + 1, coeffs.end() - 1);
        innerr.push_back(coeffs.back());
        const Scalar rhs = trace(w, coeffs.front() * moment_from_cumulants(fam, jr, innerr));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("R-diagonal and balance checks pass on circular families") {
  const auto p = nonnormalizing_params();
  const CumulantModel model(CumulantFamily::circular(p.alpha12, p.alpha21));
  CHECK(check_r_diagonal_moments(model, 4).pass);
  CHECK(check_balanced(model, 4).pass);
  CHECK_THROWS_AS(check_r_diagonal_moments(model, 7), GuardExceeded);
}

TEST_CASE("centered blocks vanish trivially on single-block words") {
  const auto p = nonnormalizing_params();
  const CumulantModel model(CumulantFamily::circular(p.alpha12, p.alpha21));
  CHECK(centered_block_expectation(model, word_from_string("1*"),
                                   {de(1, 0), DiagElement::unit(2)})
            .is_zero());
}

TEST_CASE("haar check on constant unitary fails at k = 1") {
  const ConstantModel one_model(DiagElement::unit(2));
  CHECK(!check_haar(one_model, 1));
}

TEST_CASE("outer coefficients factor out of model moments") {
  const auto p = nonnormalizing_params();
  const CumulantModel model(CumulantFamily::circular(p.alpha12, p.alpha21));
  const Word j = word_from_string("1212");
  const DiagElement b0 = deq("2/3", "-1"), bn = de(3, 5), mid = de(1, 0);
  const DiagElement unit = DiagElement::unit(2);
  const DiagElement plain = model.moment(j, {unit, unit, mid, unit, unit});
  CHECK(model.moment(j, {b0, unit, mid, unit, bn}) == b0 * plain * bn);
}

TEST_CASE("automorphism condition on cumulant matrices") {
  // Rows (q, 1-q): alpha12 = alpha21, identity automorphism.
  const Scalar q = Scalar::of(1, 3);
  LinearMapD rows(2);
  for (int i = 0; i < 2; ++i) {
    rows.at(i, 0) = q;
    rows.at(i, 1) = Scalar(1) - q;
  }
  CHECK(check_auto_condition(rows, rows, perm_identity(2)));

  const auto p = nonnormalizing_params();
  CHECK(!check_auto_condition(p.alpha12, p.alpha21, perm_identity(2)));
  CHECK(!check_auto_condition(p.alpha12, p.alpha21, perm_flip()));

  // By construction a21 := theta o a12 o theta.
  LinearMapD a12(2, {Scalar(1), Scalar(2), Scalar(3), Scalar(4)});
  LinearMapD conj(2, {Scalar(4), Scalar(3), Scalar(2), Scalar(1)});
  CHECK(check_auto_condition(a12, conj, perm_flip()));
}

TEST_CASE("even-part moment formula unfolds to alternating words") {
  const auto p = nonnormalizing_params();
  const CumulantModel model(CumulantFamily::circular(p.alpha12, p.alpha21));
  const DiagElement unit = DiagElement::unit(2);

  // n = 1, theta = id: E(a* a).
  CHECK(even_part_moments(model, perm_identity(2), {unit}) ==
        model.moment_inner(word_from_string("21"), {unit}));

  // n = 1, theta = flip: E(a* e22 a).
  CHECK(even_part_moments(model, perm_flip(), {de(1, 0)}) ==
        model.moment_inner(word_from_string("21"), {de(0, 1)}));

  // n = 2, theta = id, unit coefficients: E((a* a)^2).
  CHECK(even_part_moments(model, perm_identity(2), {unit, unit, unit}) ==
        model.moment_plain(word_from_string("2121")));
}

TEST_CASE("theta moment identity") {
  const auto ident = free_normalizing_identity_params();
  const CumulantModel m1(CumulantFamily::circular(ident.alpha12, ident.alpha21));
  CHECK(check_theta_moment_identity(m1, perm_identity(2), 4));

  const auto flip = free_normalizing_flip_params();
  const CumulantModel m2(CumulantFamily::circular(flip.alpha12, flip.alpha21));
  CHECK(check_theta_moment_identity(m2, perm_flip(), 4));

  // g1(1) = (1/2, 3/2) but g2(1) = (1, 1).
  const auto p = nonnormalizing_params();
  const CumulantModel m3(CumulantFamily::circular(p.alpha12, p.alpha21));
  CHECK(!check_theta_moment_identity(m3, perm_identity(2), 2));
}
