#ifndef OPFP_TESTS_FIXTURES_HPP
#define OPFP_TESTS_FIXTURES_HPP

#include <random>

#include "opfp/case_analysis.hpp"
#include "opfp/cumulants.hpp"
#include "opfp/recursions.hpp"

namespace opfp::testing {

// Tracial circular family with an R-diagonal, non-normalizing polar part:
// q = 1/2, alpha12 = [[1/2, 0], [1/2, 1]], alpha21 = [[1/2, 1/2], [0, 1]].
inline CircularParams nonnormalizing_params() {
  LinearMapD R(2);
  R.at(0, 0) = Scalar::of(1, 2);
  R.at(0, 1) = Scalar(0);
  R.at(1, 0) = Scalar::of(1, 2);
  R.at(1, 1) = Scalar(1);
  return CircularParams::make(Scalar::of(1, 2), R);
}

// alpha21 == alpha12 (identity automorphism normalizes): q r12 = (1-q) r21.
inline CircularParams free_normalizing_identity_params() {
  LinearMapD R(2);
  R.at(0, 0) = Scalar(1);
  R.at(0, 1) = Scalar(2);
  R.at(1, 0) = Scalar(1);
  R.at(1, 1) = Scalar(3);
  return CircularParams::make(Scalar::of(1, 3), R);
}

// alpha21 == flip o alpha12 o flip: r11 = r22, q = 1/2.
inline CircularParams free_normalizing_flip_params() {
  LinearMapD R(2);
  R.at(0, 0) = Scalar(1);
  R.at(0, 1) = Scalar(2);
  R.at(1, 0) = Scalar(3);
  R.at(1, 1) = Scalar(1);
  return CircularParams::make(Scalar::of(1, 2), R);
}

// Deterministic random tracial parameters on the denominator-16 lattice.
inline CircularParams random_params(std::mt19937_64& eng) {
  const long qd = 2 + static_cast<long>(eng() % 15);
  const long qn = 1 + static_cast<long>(eng() % (qd - 1));
  LinearMapD R(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const long den = 1 + static_cast<long>(eng() % 16);
      const long num = static_cast<long>(eng() % (3 * den + 1));
      R.at(i, j) = Scalar(rat(num, den));
    }
  return CircularParams::make(Scalar(rat(qn, qd)), R);
}

// Independent oracle: sum of hat_alpha over noncrossing pairings only (for a
// circular family every other partition contributes zero).
inline DiagElement pairing_moment(const CumulantFamily& fam, const Word& j,
                                  const std::vector<DiagElement>& bargs) {
  const int n = static_cast<int>(j.size());
  DiagElement acc(fam.dim());
  if (n % 2 != 0) return acc;
  for (const auto& pi : enumerate_noncrossing_pairings(n)) acc += hat_alpha(pi, j, bargs, fam);
  return acc;
}

// Brute-force two-sided moments as pairing sums (middle element placed as an
// interior or outer coefficient as the indices require).
inline DiagElement bf_G(const CumulantFamily& fam, int n, const DiagElement& b, int k) {
  if (n + k == 0) return b;
  Word w;
  for (int t = 0; t < n + k; ++t) {
    w.push_back(1);
    w.push_back(2);
  }
  std::vector<DiagElement> bargs(w.size() - 1, DiagElement::unit(fam.dim()));
  if (n == 0) return b * pairing_moment(fam, w, bargs);
  if (k == 0) return pairing_moment(fam, w, bargs) * b;
  bargs[2 * n - 1] = b;
  return pairing_moment(fam, w, bargs);
}

inline DiagElement bf_H(const CumulantFamily& fam, int n, const DiagElement& b, int k) {
  if (n + k == 0) return b;
  Word w;
  for (int t = 0; t < n + k; ++t) {
    w.push_back(2);
    w.push_back(1);
  }
  std::vector<DiagElement> bargs(w.size() - 1, DiagElement::unit(fam.dim()));
  if (n == 0) return b * pairing_moment(fam, w, bargs);
  if (k == 0) return pairing_moment(fam, w, bargs) * b;
  bargs[2 * n - 1] = b;
  return pairing_moment(fam, w, bargs);
}

// E((y* y)^n y* b y (y* y)^k).
inline DiagElement bf_Gp(const CumulantFamily& fam, int n, const DiagElement& b, int k) {
  Word w;
  for (int t = 0; t < n + k + 1; ++t) {
    w.push_back(2);
    w.push_back(1);
  }
  std::vector<DiagElement> bargs(w.size() - 1, DiagElement::unit(fam.dim()));
  bargs[2 * n] = b;
  return pairing_moment(fam, w, bargs);
}

// E((y y*)^n y b y* (y y*)^k).
inline DiagElement bf_Hp(const CumulantFamily& fam, int n, const DiagElement& b, int k) {
  Word w;
  for (int t = 0; t < n + k + 1; ++t) {
    w.push_back(1);
    w.push_back(2);
  }
  std::vector<DiagElement> bargs(w.size() - 1, DiagElement::unit(fam.dim()));
  bargs[2 * n] = b;
  return pairing_moment(fam, w, bargs);
}

// Word (1,2)^a (2,1)^b (1,2)^c.
inline Word word_blocks(int a, int b, int c) {
  Word w;
  for (int t = 0; t < a; ++t) {
    w.push_back(1);
    w.push_back(2);
  }
  for (int t = 0; t < b; ++t) {
    w.push_back(2);
    w.push_back(1);
  }
  for (int t = 0; t < c; ++t) {
    w.push_back(1);
    w.push_back(2);
  }
  return w;
}

inline std::vector<DiagElement> units(int count, int d = 2) {
  return std::vector<DiagElement>(count, DiagElement::unit(d));
}

inline DiagElement de(long a, long b) { return DiagElement({Scalar(a), Scalar(b)}); }
inline DiagElement deq(const char* a, const char* b) {
  return DiagElement({Scalar::parse(a), Scalar::parse(b)});
}

} // namespace opfp::testing

#endif
