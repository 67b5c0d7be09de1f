#ifndef OPFP_DIAG_HPP
#define OPFP_DIAG_HPP

#include <vector>

#include "opfp/scalar.hpp"

namespace opfp {

// Element of the diagonal algebra B = C^d. All operations are componentwise;
// multiplication is commutative and the unit is the all-ones vector.
class DiagElement {
public:
  explicit DiagElement(int d) : e_(d, Scalar(0)) {}
  explicit DiagElement(std::vector<Scalar> entries) : e_(std::move(entries)) {}
  DiagElement(std::initializer_list<Scalar> entries) : e_(entries) {}

  static DiagElement unit(int d) { return DiagElement(std::vector<Scalar>(d, Scalar(1))); }
  static DiagElement basis(int d, int i);

  int dim() const { return static_cast<int>(e_.size()); }
  const Scalar& operator[](int i) const { return e_[i]; }
  Scalar& operator[](int i) { return e_[i]; }

  bool is_zero() const;

  DiagElement operator-() const;
  friend DiagElement operator+(const DiagElement& a, const DiagElement& b);
  friend DiagElement operator-(const DiagElement& a, const DiagElement& b);
  friend DiagElement operator*(const DiagElement& a, const DiagElement& b); // componentwise
  friend DiagElement operator*(const Scalar& c, const DiagElement& b);
  DiagElement& operator+=(const DiagElement& o) { return *this = *this + o; }

  friend bool operator==(const DiagElement& a, const DiagElement& b);
  friend bool operator!=(const DiagElement& a, const DiagElement& b) { return !(a == b); }

  std::string str() const;

private:
  std::vector<Scalar> e_;
};

// Faithful trace weights on B: positive entries summing to one.
struct TraceWeights {
  std::vector<Scalar> w;

  explicit TraceWeights(std::vector<Scalar> weights);
  static TraceWeights uniform(int d);
  // tau(x, y) = q x + (1-q) y on C^2.
  static TraceWeights two_point(const Scalar& q) { return TraceWeights({q, Scalar(1) - q}); }
  int dim() const { return static_cast<int>(w.size()); }
};

Scalar trace(const TraceWeights& w, const DiagElement& b);

// Linear map B -> B as a d x d matrix; row i lists the coefficients of
// output component i.
class LinearMapD {
public:
  explicit LinearMapD(int d) : d_(d), m_(d * d, Scalar(0)) {}
  LinearMapD(int d, std::vector<Scalar> row_major);

  static LinearMapD identity(int d);
  static LinearMapD permutation(const std::vector<int>& perm); // theta(b)[i] = b[perm[i]]

  int dim() const { return d_; }
  const Scalar& at(int i, int j) const { return m_[i * d_ + j]; }
  Scalar& at(int i, int j) { return m_[i * d_ + j]; }

  DiagElement apply(const DiagElement& b) const;
  Scalar determinant() const;     // by exact Gaussian elimination
  LinearMapD inverse() const;     // throws SingularMap
  friend LinearMapD compose(const LinearMapD& a, const LinearMapD& b); // a after b
  friend LinearMapD operator+(const LinearMapD& a, const LinearMapD& b);
  friend LinearMapD operator*(const Scalar& c, const LinearMapD& a);

  // Numeric mode: all entries >= 0 (complete positivity for diagonal maps).
  bool entrywise_nonnegative() const;

  friend bool operator==(const LinearMapD& a, const LinearMapD& b);
  friend bool operator!=(const LinearMapD& a, const LinearMapD& b) { return !(a == b); }

private:
  int d_;
  std::vector<Scalar> m_;
};

inline DiagElement apply_linear(const LinearMapD& m, const DiagElement& b) { return m.apply(b); }
inline LinearMapD invert_linear(const LinearMapD& m) { return m.inverse(); }

// Multilinear map B^k -> B stored as a dense tensor of d^(k+1) scalars,
// indexed (output component; argument components). Order 0 is a constant.
class MultilinearMapD {
public:
  MultilinearMapD(int d, int order);

  static MultilinearMapD constant(const DiagElement& c);
  static MultilinearMapD from_linear(const LinearMapD& m);

  int dim() const { return d_; }
  int order() const { return order_; }

  const Scalar& at(int out, const std::vector<int>& args) const { return t_[index(out, args)]; }
  Scalar& at(int out, const std::vector<int>& args) { return t_[index(out, args)]; }

  DiagElement apply(const std::vector<DiagElement>& args) const;

  bool is_zero() const;

  friend bool operator==(const MultilinearMapD& a, const MultilinearMapD& b);
  friend bool operator!=(const MultilinearMapD& a, const MultilinearMapD& b) { return !(a == b); }

private:
  std::size_t index(int out, const std::vector<int>& args) const;
  int d_;
  int order_;
  std::vector<Scalar> t_;
};

// theta as a coordinate permutation of C^d.
using Permutation = std::vector<int>;
Permutation perm_identity(int d);
Permutation perm_flip(); // (1 2) on C^2
Permutation perm_inverse(const Permutation& p);
DiagElement apply_perm(const Permutation& p, const DiagElement& b);

} // namespace opfp

#endif
