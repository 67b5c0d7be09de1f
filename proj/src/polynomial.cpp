#include "opfp/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace opfp {

VarPool& VarPool::instance() {
  static VarPool pool;
  return pool;
}

VarPool::VarPool() {
  // Canonical order for the case-analysis parameter list.
  names_ = {"q", "r11", "r12", "r21", "r22", "m11", "m22"};
}

int VarPool::id(const std::string& name) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  names_.push_back(name);
  return static_cast<int>(names_.size() - 1);
}

const std::string& VarPool::name(int id) const {
  if (id < 0 || id >= static_cast<int>(names_.size()))
    throw Error("VarPool: unknown variable id " + std::to_string(id));
  return names_[id];
}

int VarPool::size() const { return static_cast<int>(names_.size()); }

namespace {

void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

} // namespace

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  if (a.size() > b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_quot(const Monomial& b, const Monomial& a) {
  Monomial r = b;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= a[i];
  trim(r);
  return r;
}

long mono_total_degree(const Monomial& m) {
  long d = 0;
  for (unsigned e : m) d += e;
  return d;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const long da = mono_total_degree(a), db = mono_total_degree(b);
  if (da != db) return da < db;
  // Same total degree: lexicographic by exponent vector, higher first wins,
  // i.e. a<b when a is lex-smaller.
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned ea = i < a.size() ? a[i] : 0;
    const unsigned eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea < eb;
  }
  return false;
}

Polynomial Polynomial::constant(const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms_[Monomial{}] = c;
  return p;
}

Polynomial Polynomial::variable(int var) {
  Polynomial p;
  Monomial m(var + 1, 0);
  m[var] = 1;
  p.terms_[m] = 1;
  return p;
}

Polynomial Polynomial::variable(const std::string& name) {
  return variable(var_id(name));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

const Rational& Polynomial::constant_value() const {
  static const Rational zero(0);
  if (terms_.empty()) return zero;
  if (!is_constant()) throw Error("Polynomial: not a constant: " + str());
  return terms_.begin()->second;
}

long Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return mono_total_degree(terms_.rbegin()->first);
}

long Polynomial::degree_in(int var) const {
  long d = 0;
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.size()) > var) d = std::max(d, static_cast<long>(m[var]));
  return d;
}

Polynomial Polynomial::coeff_of(int var, unsigned k) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    const unsigned e = static_cast<int>(m.size()) > var ? m[var] : 0;
    if (e != k) continue;
    Monomial rest = m;
    if (static_cast<int>(rest.size()) > var) rest[var] = 0;
    trim(rest);
    out.add_term(rest, c);
  }
  return out;
}

std::vector<int> Polynomial::variables() const {
  std::vector<int> out;
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0 && std::find(out.begin(), out.end(), static_cast<int>(i)) == out.end())
        out.push_back(static_cast<int>(i));
  std::sort(out.begin(), out.end());
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, Rational(-c));
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(mono_mul(ma, mb), Rational(ca * cb));
  return out;
}

Polynomial& Polynomial::mul_rational(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = Polynomial::constant(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) r *= base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

Rational Polynomial::content() const {
  if (terms_.empty()) throw Error("Polynomial::content of zero polynomial");
  mpz_class num_gcd(0), den_lcm(1);
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  if (terms_.rbegin()->second < 0) c = -c;
  Polynomial out = *this;
  const Rational inv = 1 / c;
  for (auto& [m, coeff] : out.terms_) coeff *= inv;
  return out;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error("Polynomial division by zero");
  Polynomial rem = a, quot;
  const auto& ltb = *b.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& lta = *rem.terms_.rbegin();
    if (!mono_divides(ltb.first, lta.first)) return std::nullopt;
    const Monomial qm = mono_quot(lta.first, ltb.first);
    const Rational qc = lta.second / ltb.second;
    quot.add_term(qm, qc);
    Polynomial t;
    t.terms_[qm] = qc;
    rem -= t * b;
  }
  return quot;
}

Rational Polynomial::evaluate(const std::map<int, Rational>& values) const {
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      auto it = values.find(static_cast<int>(i));
      if (it == values.end())
        throw Error("Polynomial::evaluate: variable " + VarPool::instance().name(static_cast<int>(i)) +
                    " unassigned");
      Rational p(1);
      const Rational& base = it->second;
      for (unsigned e = m[i]; e > 0; --e) p *= base;
      term *= p;
    }
    acc += term;
  }
  return acc;
}

std::optional<long> Polynomial::weighted_degree_if_homogeneous(const std::vector<long>& weights) const {
  std::optional<long> deg;
  for (const auto& [m, c] : terms_) {
    long d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i < weights.size()) d += weights[i] * static_cast<long>(m[i]);
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    const bool has_vars = !it->first.empty();
    if (!has_vars || c != 1) os << rational_str(c);
    bool star = !has_vars || c != 1 ? has_vars : false;
    if (star) os << "*";
    bool first_var = true;
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (it->first[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << VarPool::instance().name(static_cast<int>(i));
      if (it->first[i] > 1) os << "^" << it->first[i];
    }
  }
  return os.str();
}

} // namespace opfp
