#include "opfp/group_model.hpp"

namespace opfp {

GroupAlgebraElement GroupAlgebraElement::unit(int rank) {
  GroupAlgebraElement e(rank);
  e.terms_[std::vector<long>(rank, 0)] = Scalar(1);
  return e;
}

GroupAlgebraElement GroupAlgebraElement::monomial(std::vector<long> g, Scalar c) {
  GroupAlgebraElement e(static_cast<int>(g.size()));
  if (!c.is_zero()) e.terms_[std::move(g)] = std::move(c);
  return e;
}

void GroupAlgebraElement::add_term(const std::vector<long>& g, const Scalar& c) {
  if (static_cast<int>(g.size()) != rank_) throw DimensionMismatch("GroupAlgebraElement::add_term");
  if (c.is_zero()) return;
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_.emplace(g, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GroupAlgebraElement GroupAlgebraElement::adjoint() const {
  GroupAlgebraElement out(rank_);
  for (const auto& [g, c] : terms_) {
    std::vector<long> neg(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) neg[i] = -g[i];
    out.terms_[std::move(neg)] = c;
  }
  return out;
}

Scalar GroupAlgebraElement::trace_value() const {
  auto it = terms_.find(std::vector<long>(rank_, 0));
  return it == terms_.end() ? Scalar(0) : it->second;
}

GroupAlgebraElement GroupAlgebraElement::operator-() const {
  GroupAlgebraElement out(rank_);
  for (const auto& [g, c] : terms_) out.terms_[g] = -c;
  return out;
}

GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.rank_ != b.rank_) throw DimensionMismatch("GroupAlgebraElement+");
  GroupAlgebraElement out = a;
  for (const auto& [g, c] : b.terms_) out.add_term(g, c);
  return out;
}

GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return a + (-b);
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.rank_ != b.rank_) throw DimensionMismatch("GroupAlgebraElement*");
  GroupAlgebraElement out(a.rank_);
  for (const auto& [g1, c1] : a.terms_)
    for (const auto& [g2, c2] : b.terms_) {
      std::vector<long> g(g1.size());
      for (std::size_t i = 0; i < g.size(); ++i) g[i] = g1[i] + g2[i];
      out.add_term(g, c1 * c2);
    }
  return out;
}

GroupAlgebraElement operator*(const Scalar& c, const GroupAlgebraElement& a) {
  GroupAlgebraElement out(a.rank_);
  for (const auto& [g, coeff] : a.terms_) out.add_term(g, c * coeff);
  return out;
}

bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.rank_ != b.rank_ || a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return true;
}

Mat2GA Mat2GA::identity(int rank) {
  Mat2GA m(rank);
  m.at(0, 0) = GroupAlgebraElement::unit(rank);
  m.at(1, 1) = GroupAlgebraElement::unit(rank);
  return m;
}

Mat2GA Mat2GA::diag(const DiagElement& b, int rank) {
  if (b.dim() != 2) throw DimensionMismatch("Mat2GA::diag: needs C^2 element");
  Mat2GA m(rank);
  m.at(0, 0) = b[0] * GroupAlgebraElement::unit(rank);
  m.at(1, 1) = b[1] * GroupAlgebraElement::unit(rank);
  return m;
}

Mat2GA Mat2GA::adjoint() const {
  Mat2GA out(rank_);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.at(i, j) = at(j, i).adjoint();
  return out;
}

Mat2GA operator+(const Mat2GA& a, const Mat2GA& b) {
  Mat2GA out(a.rank());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
  return out;
}

Mat2GA operator-(const Mat2GA& a, const Mat2GA& b) {
  Mat2GA out(a.rank());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
  return out;
}

Mat2GA operator*(const Mat2GA& a, const Mat2GA& b) {
  Mat2GA out(a.rank());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.at(i, j) = a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j);
  return out;
}

bool operator==(const Mat2GA& a, const Mat2GA& b) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (a.at(i, j) != b.at(i, j)) return false;
  return true;
}

DiagElement cond_expect(const Mat2GA& m) {
  return DiagElement({m.at(0, 0).trace_value(), m.at(1, 1).trace_value()});
}

Mat2GA build_example_unitary(ExampleUnitary which) {
  const Scalar half = Scalar::of(1, 2);
  if (which == ExampleUnitary::Circle) {
    // u = (1/2) [[v + v*, v - v*], [v - v*, v + v*]] over the circle algebra.
    const auto v = GroupAlgebraElement::monomial({1}, Scalar(1));
    const auto vs = v.adjoint();
    Mat2GA u(1);
    u.at(0, 0) = half * (v + vs);
    u.at(0, 1) = half * (v - vs);
    u.at(1, 0) = half * (v - vs);
    u.at(1, 1) = half * (v + vs);
    return u;
  }
  // Torus: second Haar unitary w replaces v*.
  const auto v = GroupAlgebraElement::monomial({1, 0}, Scalar(1));
  const auto w = GroupAlgebraElement::monomial({0, 1}, Scalar(1));
  Mat2GA u(2);
  u.at(0, 0) = half * (v + w);
  u.at(0, 1) = half * (v - w);
  u.at(1, 0) = half * (v - w);
  u.at(1, 1) = half * (v + w);
  return u;
}

DiagElement word_expectation(const Mat2GA& u, const Word& eps,
                             const std::vector<DiagElement>& coeffs) {
  if (coeffs.size() + 1 != eps.size()) throw ArityMismatch("word_expectation");
  const Mat2GA us = u.adjoint();
  Mat2GA acc = (eps[0] == 1) ? u : us;
  for (std::size_t t = 1; t < eps.size(); ++t)
    acc = acc * Mat2GA::diag(coeffs[t - 1], u.rank()) * ((eps[t] == 1) ? u : us);
  return cond_expect(acc);
}

DiagElement GroupElementModel::moment(const Word& j, const std::vector<DiagElement>& b) const {
  if (b.size() != j.size() + 1) throw ArityMismatch("GroupElementModel::moment");
  Mat2GA acc = Mat2GA::diag(b[0], u_.rank());
  for (std::size_t t = 0; t < j.size(); ++t)
    acc = acc * ((j[t] == 1) ? u_ : ustar_) * Mat2GA::diag(b[t + 1], u_.rank());
  return cond_expect(acc);
}

} // namespace opfp
