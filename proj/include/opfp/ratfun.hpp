#ifndef OPFP_RATFUN_HPP
#define OPFP_RATFUN_HPP

#include <string>
#include <vector>

#include "opfp/polynomial.hpp"

namespace opfp {

// Quotient of polynomials. The denominator is kept integer-primitive with
// positive leading coefficient; common factors are cancelled by content
// removal plus trial division against a registry of candidate factors (the
// primitive denominators seen at division sites), not by multivariate gcd.
// Equality is cross-multiplication.
class RatFun {
public:
  RatFun() : num_(), den_(Polynomial::constant(1)) {}
  explicit RatFun(Polynomial p) : num_(std::move(p)), den_(Polynomial::constant(1)) {}
  RatFun(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const; // requires is_constant

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b); // throws on zero divisor

  friend bool operator==(const RatFun& a, const RatFun& b);
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  std::string str() const;

  // Candidate factors used by normalization; registered automatically at
  // division sites, exposed for tests.
  static const std::vector<Polynomial>& candidate_factors();
  static void register_candidate(const Polynomial& p);

private:
  void normalize();
  Polynomial num_, den_;
};

} // namespace opfp

#endif
