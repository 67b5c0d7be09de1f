#ifndef OPFP_CUMULANTS_HPP
#define OPFP_CUMULANTS_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "opfp/diag.hpp"
#include "opfp/partitions.hpp"

namespace opfp {

// *-cumulants of a single variable: one multilinear map per word over
// {1,2} = {a, a*}, stored sparsely (absent words are the zero map). The map
// attached to a word of length n has order n-1.
class CumulantFamily {
public:
  explicit CumulantFamily(int d) : d_(d) {}

  // Circular specialization: exactly the order-two alternating cumulants.
  // Numeric entries must be nonnegative (complete positivity).
  static CumulantFamily circular(const LinearMapD& a12, const LinearMapD& a21);

  int dim() const { return d_; }
  const MultilinearMapD* find(const Word& j) const;
  void set(const Word& j, MultilinearMapD m);
  // alpha_j applied to |j|-1 arguments; zero vector for absent words.
  DiagElement apply(const Word& j, const std::vector<DiagElement>& bargs) const;
  const std::map<Word, MultilinearMapD>& maps() const { return maps_; }

private:
  int d_;
  std::map<Word, MultilinearMapD> maps_;
};

// hat_alpha(pi)[b_1..b_{n-1}]: recursive interval-block peeling of the
// moment-cumulant formula. Always peels the leftmost interval block.
DiagElement hat_alpha(const NCPartition& pi, const Word& j,
                      const std::vector<DiagElement>& bargs, const CumulantFamily& fam);

// E(a^{j(1)} b_1 ... b_{n-1} a^{j(n)}) = sum over NC(n) of hat_alpha.
DiagElement moment_from_cumulants(const CumulantFamily& fam, const Word& j,
                                  const std::vector<DiagElement>& bargs);

// A *-distribution oracle: evaluates E(b_0 a^{j(1)} b_1 ... a^{j(n)} b_n).
class ElementModel {
public:
  virtual ~ElementModel() = default;
  virtual int dim() const = 0;
  // b.size() == j.size() + 1 (outer coefficients included).
  virtual DiagElement moment(const Word& j, const std::vector<DiagElement>& b) const = 0;

  // Convenience: unit outer coefficients, b_1..b_{n-1} between letters.
  DiagElement moment_inner(const Word& j, const std::vector<DiagElement>& inner) const;
  // All coefficients the unit.
  DiagElement moment_plain(const Word& j) const;
};

// Model backed by a cumulant family via the moment-cumulant formula.
class CumulantModel : public ElementModel {
public:
  explicit CumulantModel(CumulantFamily fam) : fam_(std::move(fam)) {}
  int dim() const override { return fam_.dim(); }
  DiagElement moment(const Word& j, const std::vector<DiagElement>& b) const override;
  const CumulantFamily& family() const { return fam_; }

private:
  CumulantFamily fam_;
};

// Deterministic element b in B, viewed as a with a = a* = b.
class ConstantModel : public ElementModel {
public:
  explicit ConstantModel(DiagElement b) : b_(std::move(b)) {}
  int dim() const override { return b_.dim(); }
  DiagElement moment(const Word& j, const std::vector<DiagElement>& b) const override;

private:
  DiagElement b_;
};

// Inverts the moment-cumulant formula order by order: for every word of
// length <= max_order, the map with moments reproduced on basis tuples.
CumulantFamily cumulants_from_moments(const ElementModel& model, int max_order);

// tau(alpha12(b1) b2) - tau(b1 alpha21(b2)) on all basis pairs; the d x d
// matrix of defects (all zero iff the trace is compatible with the pair).
std::vector<Scalar> traciality_defects(const TraceWeights& w, const LinearMapD& a12,
                                       const LinearMapD& a21);
bool check_traciality(const TraceWeights& w, const LinearMapD& a12, const LinearMapD& a21);

struct Witness {
  std::string kind;  // "odd-alternating" | "centered-block" | "unbalanced"
  Word eps;
  std::vector<DiagElement> coeffs;
  DiagElement value;
};

struct CheckReport {
  bool pass = true;
  std::optional<Witness> witness;
};

// E( prod over blocks V of sigma(eps) of [prod_{j in V} a^{eps(j)} b_j -
// E(prod_{j in V} a^{eps(j)} b_j)] ), expanded into plain moments.
DiagElement centered_block_expectation(const ElementModel& model, const Word& eps,
                                       const std::vector<DiagElement>& coeffs);

// Moment property of R-diagonality: odd alternating moments and the
// sigma(eps) centered-block conditions, coefficients from the basis vectors
// plus the unit, word length <= max_len <= 6.
CheckReport check_r_diagonal_moments(const ElementModel& model, int max_len);

// All unbalanced *-moments vanish (coefficients basis + unit, length <= max_len).
CheckReport check_balanced(const ElementModel& model, int max_len);

// E(u^k) = 0 = E((u*)^k) for 1 <= k <= K.
bool check_haar(const ElementModel& model, int K);

// Order-one instance of the cumulant automorphism condition:
// alpha21 == theta o alpha12 o theta as matrices.
bool check_auto_condition(const LinearMapD& a12, const LinearMapD& a21, const Permutation& theta);

// E(a* theta^{-1}(b1) a b2 a* theta^{-1}(b3) a ... ) with |bargs| = 2n-1:
// the even moments of the self-adjoint part of a normalizing decomposition.
DiagElement even_part_moments(const ElementModel& model, const Permutation& theta,
                              const std::vector<DiagElement>& bargs);

// E((aa*)^k) == theta^{-1}(E((a*a)^k)) for 1 <= k <= K.
bool check_theta_moment_identity(const ElementModel& model, const Permutation& theta, int K);

} // namespace opfp

#endif
