#include "opfp/scalar.hpp"

#include "opfp/errors.hpp"

namespace opfp {

Scalar::Scalar(RatFun f) {
  if (f.is_constant())
    v_ = f.constant_value();
  else
    v_ = std::move(f);
}

const Rational& Scalar::rational_value() const {
  if (!is_rational()) throw SymbolicValue("numeric value required, got " + str());
  return std::get<Rational>(v_);
}

RatFun Scalar::as_ratfun() const {
  if (is_rational()) return RatFun(Polynomial::constant(std::get<Rational>(v_)));
  return std::get<RatFun>(v_);
}

bool Scalar::is_zero() const {
  if (is_rational()) return std::get<Rational>(v_) == 0;
  return std::get<RatFun>(v_).is_zero();
}

bool Scalar::is_one() const {
  if (is_rational()) return std::get<Rational>(v_) == 1;
  return std::get<RatFun>(v_) == RatFun(Polynomial::constant(1));
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(Rational(-std::get<Rational>(v_)));
  return Scalar(-std::get<RatFun>(v_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational())
    return Scalar(Rational(a.rational_value() + b.rational_value()));
  return Scalar(a.as_ratfun() + b.as_ratfun());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational())
    return Scalar(Rational(a.rational_value() - b.rational_value()));
  return Scalar(a.as_ratfun() - b.as_ratfun());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational())
    return Scalar(Rational(a.rational_value() * b.rational_value()));
  return Scalar(a.as_ratfun() * b.as_ratfun());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw DomainError("Scalar: division by zero");
  if (a.is_rational() && b.is_rational())
    return Scalar(Rational(a.rational_value() / b.rational_value()));
  return Scalar(a.as_ratfun() / b.as_ratfun());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) return a.rational_value() == b.rational_value();
  return a.as_ratfun() == b.as_ratfun();
}

bool operator<(const Scalar& a, const Scalar& b) {
  return a.rational_value() < b.rational_value();
}

std::string Scalar::str() const {
  if (is_rational()) return rational_str(std::get<Rational>(v_));
  return std::get<RatFun>(v_).str();
}

Scalar substitute(const Polynomial& p, const std::map<int, Scalar>& assignment) {
  Scalar acc(0);
  for (const auto& [m, c] : p.terms()) {
    Scalar term{Rational(c)};
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      auto it = assignment.find(static_cast<int>(i));
      Scalar base = it != assignment.end() ? it->second
                                           : Scalar(RatFun(Polynomial::variable(static_cast<int>(i))));
      for (unsigned e = m[i]; e > 0; --e) term *= base;
    }
    acc += term;
  }
  return acc;
}

Scalar substitute(const Scalar& s, const std::map<int, Scalar>& assignment) {
  if (s.is_rational()) return s;
  const RatFun& f = s.as_ratfun();
  Scalar n = substitute(f.num(), assignment);
  Scalar d = substitute(f.den(), assignment);
  if (d.is_zero()) throw DomainError("substitute: denominator vanishes");
  return n / d;
}

} // namespace opfp
