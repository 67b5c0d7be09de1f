#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "opfp/diag.hpp"

using namespace opfp;
using namespace opfp::testing;

TEST_CASE("apply_linear on the stated instances") {
  LinearMapD a12(2);
  a12.at(0, 0) = Scalar::of(1, 2);
  a12.at(1, 0) = Scalar::of(1, 2);
  a12.at(1, 1) = Scalar(1);
  CHECK(apply_linear(a12, DiagElement::unit(2)) == deq("1/2", "3/2"));

  LinearMapD a21(2);
  a21.at(0, 0) = Scalar::of(1, 2);
  a21.at(0, 1) = Scalar::of(1, 2);
  a21.at(1, 1) = Scalar(1);
  CHECK(apply_linear(a21, de(1, 0)) == deq("1/2", "0"));

  const LinearMapD id = LinearMapD::identity(2);
  CHECK(apply_linear(id, deq("2/7", "-3")) == deq("2/7", "-3"));

  CHECK_THROWS_AS(a12.apply(DiagElement::unit(3)), DimensionMismatch);
}

TEST_CASE("invert_linear") {
  CHECK(invert_linear(LinearMapD::identity(2)) == LinearMapD::identity(2));

  LinearMapD diag(2);
  diag.at(0, 0) = Scalar(2);
  diag.at(1, 1) = Scalar(3);
  LinearMapD expect(2);
  expect.at(0, 0) = Scalar::of(1, 2);
  expect.at(1, 1) = Scalar::of(1, 3);
  CHECK(invert_linear(diag) == expect);

  LinearMapD rank1(2, {Scalar(1), Scalar(1), Scalar(1), Scalar(1)});
  CHECK(rank1.determinant().is_zero());
  CHECK_THROWS_AS(invert_linear(rank1), SingularMap);
}

TEST_CASE("inverse composes to the identity exactly, composition associates") {
  std::mt19937_64 eng(3);
  auto draw = [&]() {
    LinearMapD m(2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        m.at(i, j) = Scalar(rat(static_cast<long>(eng() % 9) - 4, 1 + static_cast<long>(eng() % 5)));
    return m;
  };
  int checked = 0;
  for (int t = 0; t < 30; ++t) {
    const LinearMapD m1 = draw(), m2 = draw();
    DiagElement b(2);
    b[0] = Scalar(rat(static_cast<long>(eng() % 7) - 3, 2));
    b[1] = Scalar(rat(static_cast<long>(eng() % 7) - 3, 3));
    CHECK(compose(m1, m2).apply(b) == m1.apply(m2.apply(b)));
    if (!m1.determinant().is_zero()) {
      CHECK(compose(m1, invert_linear(m1)) == LinearMapD::identity(2));
      ++checked;
    }
  }
  CHECK(checked > 5);
}

TEST_CASE("trace instances") {
  CHECK(trace(TraceWeights::uniform(2), de(1, -1)).is_zero());

  const Scalar q = Scalar::variable("q");
  CHECK(trace(TraceWeights::two_point(q), DiagElement::unit(2)).is_one());

  CHECK(trace(TraceWeights::uniform(2), deq("1/2", "1/4")) == Scalar::of(3, 8));
  CHECK_THROWS_AS(trace(TraceWeights::uniform(3), de(1, 1)), DimensionMismatch);
  CHECK_THROWS_AS(TraceWeights({Scalar(2), Scalar(0)}), DomainError);
}

TEST_CASE("multilinear maps") {
  // Order 0: a constant.
  const MultilinearMapD c = MultilinearMapD::constant(deq("1/3", "5"));
  CHECK(c.apply({}) == deq("1/3", "5"));

  // Order 1 encoding the identity.
  const MultilinearMapD id1 = MultilinearMapD::from_linear(LinearMapD::identity(2));
  CHECK(id1.apply({deq("2", "-7/3")}) == deq("2", "-7/3"));

  // Order 2 all-ones tensor: out_i = (sum of first arg)(sum of second arg).
  MultilinearMapD all1(2, 2);
  for (int out = 0; out < 2; ++out)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) all1.at(out, {a, b}) = Scalar(1);
  CHECK(all1.apply({de(1, 0), de(0, 1)}) == de(1, 1));

  CHECK_THROWS_AS(all1.apply({de(1, 0)}), ArityMismatch);
}

TEST_CASE("multilinearity in each slot") {
  std::mt19937_64 eng(5);
  MultilinearMapD m(2, 2);
  for (int out = 0; out < 2; ++out)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) m.at(out, {a, b}) = Scalar(rat(static_cast<long>(eng() % 11) - 5, 2));
  const DiagElement x = deq("1/2", "3"), y = de(2, -1), z = deq("-1/3", "1/5");
  CHECK(m.apply({x + y, z}) == m.apply({x, z}) + m.apply({y, z}));
  CHECK(m.apply({x, y + z}) == m.apply({x, y}) + m.apply({x, z}));
  const Scalar c = Scalar::of(5, 7);
  CHECK(m.apply({c * x, y}) == c * m.apply({x, y}));
}

TEST_CASE("coordinate permutations") {
  const Permutation flip = perm_flip();
  CHECK(apply_perm(flip, de(3, 4)) == de(4, 3));
  CHECK(perm_inverse(flip) == flip);
  CHECK(apply_perm(perm_identity(2), de(3, 4)) == de(3, 4));
}
