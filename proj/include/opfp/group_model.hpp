#ifndef OPFP_GROUP_MODEL_HPP
#define OPFP_GROUP_MODEL_HPP

#include <array>
#include <map>

#include "opfp/cumulants.hpp"

namespace opfp {

// Finitely supported function Z^k -> Scalar with convolution product; the
// dense group algebra of Z^k. Adjoint negates indices (coefficients are
// rational, so conjugation is the identity); trace is the coefficient at 0.
class GroupAlgebraElement {
public:
  explicit GroupAlgebraElement(int rank) : rank_(rank) {}

  static GroupAlgebraElement unit(int rank);
  static GroupAlgebraElement monomial(std::vector<long> g, Scalar c);

  int rank() const { return rank_; }
  std::size_t support_size() const { return terms_.size(); }
  const std::map<std::vector<long>, Scalar>& terms() const { return terms_; }

  GroupAlgebraElement adjoint() const;
  Scalar trace_value() const; // coefficient at the zero vector
  bool is_zero() const { return terms_.empty(); }

  GroupAlgebraElement operator-() const;
  friend GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend GroupAlgebraElement operator*(const Scalar& c, const GroupAlgebraElement& a);
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend bool operator!=(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return !(a == b); }

  void add_term(const std::vector<long>& g, const Scalar& c);

private:
  int rank_;
  std::map<std::vector<long>, Scalar> terms_;
};

// 2x2 matrix over a group algebra; adjoint is the conjugate transpose.
class Mat2GA {
public:
  explicit Mat2GA(int rank)
      : rank_(rank), e_{GroupAlgebraElement(rank), GroupAlgebraElement(rank),
                        GroupAlgebraElement(rank), GroupAlgebraElement(rank)} {}

  static Mat2GA identity(int rank);
  // Diagonal matrix of B-constants.
  static Mat2GA diag(const DiagElement& b, int rank);

  int rank() const { return rank_; }
  const GroupAlgebraElement& at(int i, int j) const { return e_[i * 2 + j]; }
  GroupAlgebraElement& at(int i, int j) { return e_[i * 2 + j]; }

  Mat2GA adjoint() const;
  friend Mat2GA operator+(const Mat2GA& a, const Mat2GA& b);
  friend Mat2GA operator-(const Mat2GA& a, const Mat2GA& b);
  friend Mat2GA operator*(const Mat2GA& a, const Mat2GA& b);
  friend bool operator==(const Mat2GA& a, const Mat2GA& b);
  friend bool operator!=(const Mat2GA& a, const Mat2GA& b) { return !(a == b); }

private:
  int rank_;
  std::array<GroupAlgebraElement, 4> e_;
};

// E onto diagonal constants: (trace of entry (1,1), trace of entry (2,2)).
DiagElement cond_expect(const Mat2GA& m);

enum class ExampleUnitary { Circle, Torus };

// Circle: u = p (x) v + (1-p) (x) v* over C(T); torus: u = p (x) v + (1-p) (x) w
// over the group algebra of Z^2; p the rank-one projection (1/2) * all-ones.
Mat2GA build_example_unitary(ExampleUnitary which);

// E(u^{eps(1)} b_1 u^{eps(2)} ... b_{n-1} u^{eps(n)}), literal matrix product.
DiagElement word_expectation(const Mat2GA& u, const Word& eps,
                             const std::vector<DiagElement>& coeffs);

// ElementModel view of a matrix unitary, so the cumulant-engine checks run
// against group models.
class GroupElementModel : public ElementModel {
public:
  explicit GroupElementModel(Mat2GA u) : u_(std::move(u)), ustar_(u_.adjoint()) {}
  int dim() const override { return 2; }
  DiagElement moment(const Word& j, const std::vector<DiagElement>& b) const override;
  const Mat2GA& unitary() const { return u_; }

private:
  Mat2GA u_, ustar_;
};

inline GroupElementModel element_model_adapter(const Mat2GA& m) { return GroupElementModel(m); }

} // namespace opfp

#endif
