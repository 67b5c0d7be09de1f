#ifndef OPFP_POLYNOMIAL_HPP
#define OPFP_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opfp/rational.hpp"

namespace opfp {

// Process-wide registry of polynomial variables. The case analysis works in
// the fixed list (q, r11, r12, r21, r22, m11, m22), registered up front so
// monomial orders are stable; tests may register extras (s11, ..., t).
class VarPool {
public:
  static VarPool& instance();

  int id(const std::string& name);       // registers on first use
  const std::string& name(int id) const;
  int size() const;

private:
  VarPool();
  std::vector<std::string> names_;
};

inline int var_id(const std::string& name) { return VarPool::instance().id(name); }

// Exponent vector indexed by variable id, trailing zeros trimmed.
using Monomial = std::vector<unsigned>;

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b); // a | b
Monomial mono_quot(const Monomial& b, const Monomial& a); // b / a
long mono_total_degree(const Monomial& m);

// Graded lexicographic, ascending. Multiplicative: a<b implies ac<bc.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over the rationals, canonical expanded form
// (no zero coefficients, grlex-ordered term map).
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  Polynomial() = default;
  static Polynomial constant(const Rational& c);
  static Polynomial variable(int var);
  static Polynomial variable(const std::string& name);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Rational& constant_value() const; // requires is_constant or zero

  long total_degree() const; // -1 for the zero polynomial
  long degree_in(int var) const;
  // Coefficient of var^k, a polynomial in the remaining variables.
  Polynomial coeff_of(int var, unsigned k) const;
  std::vector<int> variables() const; // ids actually present

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& mul_rational(const Rational& c);
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Positive rational c such that (*this)/c has coprime integer coefficients.
  Rational content() const; // requires nonzero
  // Divided by signed content: integer coefficients, gcd 1, leading coeff > 0.
  Polynomial primitive() const;

  // Exact quotient a/b, or nullopt when b does not divide a.
  static std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

  // Full evaluation; every variable occurring must be assigned.
  Rational evaluate(const std::map<int, Rational>& values) const;

  // All monomials share the same weighted degree (weight 0 for ids beyond
  // the weight vector). Returns that degree, or nullopt.
  std::optional<long> weighted_degree_if_homogeneous(const std::vector<long>& weights) const;

  std::string str() const;

  void add_term(const Monomial& m, const Rational& c); // merges, drops zeros

private:
  TermMap terms_;
};

} // namespace opfp

#endif
