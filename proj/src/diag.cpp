#include "opfp/diag.hpp"

#include <sstream>

#include "opfp/errors.hpp"

namespace opfp {

DiagElement DiagElement::basis(int d, int i) {
  DiagElement b(d);
  b.e_[i] = Scalar(1);
  return b;
}

bool DiagElement::is_zero() const {
  for (const auto& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

DiagElement DiagElement::operator-() const {
  DiagElement r = *this;
  for (auto& s : r.e_) s = -s;
  return r;
}

namespace {
void require_same_dim(int a, int b, const char* what) {
  if (a != b) throw DimensionMismatch(std::string(what) + ": dimensions " + std::to_string(a) +
                                      " vs " + std::to_string(b));
}
} // namespace

DiagElement operator+(const DiagElement& a, const DiagElement& b) {
  require_same_dim(a.dim(), b.dim(), "DiagElement+");
  DiagElement r = a;
  for (int i = 0; i < r.dim(); ++i) r.e_[i] += b.e_[i];
  return r;
}

DiagElement operator-(const DiagElement& a, const DiagElement& b) {
  require_same_dim(a.dim(), b.dim(), "DiagElement-");
  DiagElement r = a;
  for (int i = 0; i < r.dim(); ++i) r.e_[i] -= b.e_[i];
  return r;
}

DiagElement operator*(const DiagElement& a, const DiagElement& b) {
  require_same_dim(a.dim(), b.dim(), "DiagElement*");
  DiagElement r = a;
  for (int i = 0; i < r.dim(); ++i) r.e_[i] *= b.e_[i];
  return r;
}

DiagElement operator*(const Scalar& c, const DiagElement& b) {
  DiagElement r = b;
  for (int i = 0; i < r.dim(); ++i) r.e_[i] = c * r.e_[i];
  return r;
}

bool operator==(const DiagElement& a, const DiagElement& b) {
  if (a.dim() != b.dim()) return false;
  for (int i = 0; i < a.dim(); ++i)
    if (a.e_[i] != b.e_[i]) return false;
  return true;
}

std::string DiagElement::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < dim(); ++i) {
    if (i) os << ", ";
    os << e_[i].str();
  }
  os << ")";
  return os.str();
}

TraceWeights::TraceWeights(std::vector<Scalar> weights) : w(std::move(weights)) {
  Scalar sum(0);
  for (const auto& s : w) {
    sum += s;
    if (s.is_rational() && s.rational_value() <= 0)
      throw DomainError("TraceWeights: weights must be positive");
  }
  if (!(sum == Scalar(1))) throw DomainError("TraceWeights: weights must sum to 1");
}

TraceWeights TraceWeights::uniform(int d) {
  return TraceWeights(std::vector<Scalar>(d, Scalar(rat(1, d))));
}

Scalar trace(const TraceWeights& w, const DiagElement& b) {
  if (w.dim() != b.dim()) throw DimensionMismatch("trace: weight/element dimension mismatch");
  Scalar acc(0);
  for (int i = 0; i < b.dim(); ++i) acc += w.w[i] * b[i];
  return acc;
}

LinearMapD::LinearMapD(int d, std::vector<Scalar> row_major) : d_(d), m_(std::move(row_major)) {
  if (static_cast<int>(m_.size()) != d * d) throw DimensionMismatch("LinearMapD: bad entry count");
}

LinearMapD LinearMapD::identity(int d) {
  LinearMapD m(d);
  for (int i = 0; i < d; ++i) m.at(i, i) = Scalar(1);
  return m;
}

LinearMapD LinearMapD::permutation(const std::vector<int>& perm) {
  const int d = static_cast<int>(perm.size());
  LinearMapD m(d);
  for (int i = 0; i < d; ++i) m.at(i, perm[i]) = Scalar(1);
  return m;
}

DiagElement LinearMapD::apply(const DiagElement& b) const {
  if (b.dim() != d_) throw DimensionMismatch("LinearMapD::apply");
  DiagElement out(d_);
  for (int i = 0; i < d_; ++i) {
    Scalar acc(0);
    for (int j = 0; j < d_; ++j) acc += at(i, j) * b[j];
    out[i] = acc;
  }
  return out;
}

Scalar LinearMapD::determinant() const {
  // Exact Gaussian elimination over the coefficient field.
  std::vector<Scalar> a = m_;
  Scalar det(1);
  for (int col = 0; col < d_; ++col) {
    int pivot = -1;
    for (int row = col; row < d_; ++row)
      if (!a[row * d_ + col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) return Scalar(0);
    if (pivot != col) {
      for (int j = 0; j < d_; ++j) std::swap(a[pivot * d_ + j], a[col * d_ + j]);
      det = -det;
    }
    det *= a[col * d_ + col];
    const Scalar inv = Scalar(1) / a[col * d_ + col];
    for (int row = col + 1; row < d_; ++row) {
      const Scalar f = a[row * d_ + col] * inv;
      if (f.is_zero()) continue;
      for (int j = col; j < d_; ++j) a[row * d_ + j] -= f * a[col * d_ + j];
    }
  }
  return det;
}

LinearMapD LinearMapD::inverse() const {
  // Gauss-Jordan on [A | I].
  std::vector<Scalar> a = m_;
  LinearMapD inv = identity(d_);
  for (int col = 0; col < d_; ++col) {
    int pivot = -1;
    for (int row = col; row < d_; ++row)
      if (!a[row * d_ + col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw SingularMap("LinearMapD: singular map has no inverse");
    if (pivot != col)
      for (int j = 0; j < d_; ++j) {
        std::swap(a[pivot * d_ + j], a[col * d_ + j]);
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    const Scalar p = a[col * d_ + col];
    const Scalar pinv = Scalar(1) / p;
    for (int j = 0; j < d_; ++j) {
      a[col * d_ + j] *= pinv;
      inv.at(col, j) *= pinv;
    }
    for (int row = 0; row < d_; ++row) {
      if (row == col) continue;
      const Scalar f = a[row * d_ + col];
      if (f.is_zero()) continue;
      for (int j = 0; j < d_; ++j) {
        a[row * d_ + j] -= f * a[col * d_ + j];
        inv.at(row, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

LinearMapD compose(const LinearMapD& a, const LinearMapD& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("compose");
  LinearMapD r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      Scalar acc(0);
      for (int k = 0; k < a.dim(); ++k) acc += a.at(i, k) * b.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

LinearMapD operator+(const LinearMapD& a, const LinearMapD& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("LinearMapD+");
  LinearMapD r = a;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r.at(i, j) += b.at(i, j);
  return r;
}

LinearMapD operator*(const Scalar& c, const LinearMapD& a) {
  LinearMapD r = a;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r.at(i, j) = c * r.at(i, j);
  return r;
}

bool LinearMapD::entrywise_nonnegative() const {
  for (const auto& s : m_)
    if (s.is_rational() && s.rational_value() < 0) return false;
  return true;
}

bool operator==(const LinearMapD& a, const LinearMapD& b) {
  if (a.d_ != b.d_) return false;
  for (std::size_t i = 0; i < a.m_.size(); ++i)
    if (a.m_[i] != b.m_[i]) return false;
  return true;
}

MultilinearMapD::MultilinearMapD(int d, int order) : d_(d), order_(order) {
  std::size_t n = 1;
  for (int i = 0; i <= order; ++i) n *= d;
  t_.assign(n, Scalar(0));
}

MultilinearMapD MultilinearMapD::constant(const DiagElement& c) {
  MultilinearMapD m(c.dim(), 0);
  for (int i = 0; i < c.dim(); ++i) m.t_[i] = c[i];
  return m;
}

MultilinearMapD MultilinearMapD::from_linear(const LinearMapD& lin) {
  MultilinearMapD m(lin.dim(), 1);
  for (int i = 0; i < lin.dim(); ++i)
    for (int j = 0; j < lin.dim(); ++j) m.at(i, {j}) = lin.at(i, j);
  return m;
}

std::size_t MultilinearMapD::index(int out, const std::vector<int>& args) const {
  if (static_cast<int>(args.size()) != order_) throw ArityMismatch("MultilinearMapD: arity");
  std::size_t idx = out;
  for (int a : args) idx = idx * d_ + a;
  return idx;
}

DiagElement MultilinearMapD::apply(const std::vector<DiagElement>& args) const {
  if (static_cast<int>(args.size()) != order_)
    throw ArityMismatch("MultilinearMapD::apply: expected " + std::to_string(order_) +
                        " arguments, got " + std::to_string(args.size()));
  for (const auto& a : args)
    if (a.dim() != d_) throw DimensionMismatch("MultilinearMapD::apply");
  DiagElement out(d_);
  std::vector<int> idx(order_, 0);
  // Full tensor contraction over all argument component tuples.
  while (true) {
    Scalar prod(1);
    for (int t = 0; t < order_; ++t) prod *= args[t][idx[t]];
    if (!prod.is_zero()) {
      for (int i = 0; i < d_; ++i) {
        const Scalar& c = at(i, idx);
        if (!c.is_zero()) out[i] += c * prod;
      }
    }
    int p = order_ - 1;
    while (p >= 0 && idx[p] == d_ - 1) idx[p--] = 0;
    if (p < 0) break;
    ++idx[p];
  }
  return out;
}

bool MultilinearMapD::is_zero() const {
  for (const auto& s : t_)
    if (!s.is_zero()) return false;
  return true;
}

bool operator==(const MultilinearMapD& a, const MultilinearMapD& b) {
  if (a.d_ != b.d_ || a.order_ != b.order_) return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i)
    if (a.t_[i] != b.t_[i]) return false;
  return true;
}

Permutation perm_identity(int d) {
  Permutation p(d);
  for (int i = 0; i < d; ++i) p[i] = i;
  return p;
}

Permutation perm_flip() { return {1, 0}; }

Permutation perm_inverse(const Permutation& p) {
  Permutation inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

DiagElement apply_perm(const Permutation& p, const DiagElement& b) {
  if (static_cast<int>(p.size()) != b.dim()) throw DimensionMismatch("apply_perm");
  DiagElement out(b.dim());
  for (int i = 0; i < b.dim(); ++i) out[i] = b[p[i]];
  return out;
}

} // namespace opfp
