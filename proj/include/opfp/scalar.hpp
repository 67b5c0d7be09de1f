#ifndef OPFP_SCALAR_HPP
#define OPFP_SCALAR_HPP

#include <map>
#include <string>
#include <variant>

#include "opfp/ratfun.hpp"

namespace opfp {

// Element of the coefficient field: either a big rational (numeric mode) or
// a rational function of the named parameters (symbolic mode). Mixed
// arithmetic lifts the rational side. No floating point anywhere.
class Scalar {
public:
  Scalar() : v_(Rational(0)) {}
  Scalar(int n) : v_(Rational(n)) {}
  Scalar(long n) : v_(Rational(n)) {}
  Scalar(Rational r) : v_(std::move(r)) {}
  Scalar(RatFun f);

  static Scalar variable(const std::string& name) {
    return Scalar(RatFun(Polynomial::variable(name)));
  }
  static Scalar of(long num, long den) { return Scalar(rat(num, den)); }
  // Parses "p/q" or "n" (numeric mode only).
  static Scalar parse(const std::string& s) { return Scalar(parse_rational(s)); }

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rational_value() const; // throws SymbolicValue if symbolic
  RatFun as_ratfun() const;

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Order comparisons are numeric-mode only.
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

  std::string str() const;

private:
  std::variant<Rational, RatFun> v_;
};

// Substitutes variables (by id) and demotes the result to a rational when
// nothing symbolic is left.
Scalar substitute(const Scalar& s, const std::map<int, Scalar>& assignment);
Scalar substitute(const Polynomial& p, const std::map<int, Scalar>& assignment);

} // namespace opfp

#endif
