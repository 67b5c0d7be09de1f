#include "opfp/ratfun.hpp"

#include "opfp/errors.hpp"

namespace opfp {

namespace {

std::vector<Polynomial>& candidates() {
  static std::vector<Polynomial> cs;
  return cs;
}

} // namespace

const std::vector<Polynomial>& RatFun::candidate_factors() { return candidates(); }

void RatFun::register_candidate(const Polynomial& p) {
  if (p.is_zero() || p.is_constant()) return;
  Polynomial prim = p.primitive();
  // Peel off known factors first so the registry stays close to irreducible.
  for (const auto& f : candidates()) {
    while (true) {
      auto q = Polynomial::divide_exact(prim, f);
      if (!q) break;
      prim = *q;
    }
  }
  if (prim.is_constant()) return;
  prim = prim.primitive();
  for (const auto& f : candidates())
    if (f == prim) return;
  candidates().push_back(prim);
}

RatFun::RatFun(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("RatFun: zero denominator");
  register_candidate(den_);
  normalize();
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  if (den_.is_constant()) {
    if (den_.constant_value() != 1) {
      num_.mul_rational(1 / den_.constant_value());
      den_ = Polynomial::constant(1);
    }
    return;
  }
  // Whole-denominator cancellation happens often (telescoping sums).
  if (auto q = Polynomial::divide_exact(num_, den_)) {
    num_ = *q;
    den_ = Polynomial::constant(1);
    return;
  }
  for (const auto& f : candidates()) {
    while (true) {
      auto qd = Polynomial::divide_exact(den_, f);
      if (!qd) break;
      auto qn = Polynomial::divide_exact(num_, f);
      if (!qn) break;
      den_ = *qd;
      num_ = *qn;
    }
    if (den_.is_constant()) break;
  }
  // Move denominator content into the numerator, fix the sign.
  if (den_.is_constant()) {
    num_.mul_rational(1 / den_.constant_value());
    den_ = Polynomial::constant(1);
    return;
  }
  Rational c = den_.content();
  if (den_.terms().rbegin()->second < 0) c = -c;
  if (c != 1) {
    den_.mul_rational(1 / c);
    num_.mul_rational(1 / c);
  }
}

Rational RatFun::constant_value() const {
  if (!is_constant()) throw SymbolicValue("RatFun: not constant: " + str());
  if (num_.is_zero()) return Rational(0);
  return Rational(num_.constant_value() / den_.constant_value());
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) {
    RatFun r;
    r.num_ = a.num_ + b.num_;
    r.den_ = a.den_;
    r.normalize();
    return r;
  }
  RatFun r;
  r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  RatFun r;
  r.num_ = a.num_ * b.num_;
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw DomainError("RatFun: division by zero");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFun& a, const RatFun& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RatFun::str() const {
  if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace opfp
