#ifndef OPFP_RECURSIONS_HPP
#define OPFP_RECURSIONS_HPP

#include <map>
#include <optional>
#include <tuple>

#include "opfp/cumulants.hpp"

namespace opfp {

// Tracial circular pair over C^2: q in (0,1) and the matrix R of alpha_{(1,2)};
// alpha_{(2,1)} is always derived from the trace relation
//   s11 = r11, s22 = r22, s12 = (1-q)/q r21, s21 = q/(1-q) r12,
// never stored independently. Entries may be rational or symbolic.
struct CircularParams {
  Scalar q;
  LinearMapD alpha12;
  LinearMapD alpha21;

  static CircularParams make(const Scalar& q, const LinearMapD& R);
  // q, r11, r12, r21, r22 as free symbols.
  static CircularParams symbolic();
  // R scaled by t^2 (replacing a by t a), q unchanged; t > 0 numeric.
  CircularParams rescaled(const Scalar& t) const;

  const Scalar& r(int i, int j) const { return alpha12.at(i, j); }
};

// Choice of the map N2(b) = E(u* b u): derived from alpha12^{-1} N1 alpha21
// when alpha12 is invertible, otherwise the positive unital matrix
// [[m11, 1-m11], [1-m22, m22]].
struct N2Choice {
  enum class Mode { Invertible, Parametric };
  Mode mode = Mode::Invertible;
  Scalar m11, m22;

  static N2Choice invertible() { return {Mode::Invertible, Scalar(0), Scalar(0)}; }
  static N2Choice parametric(const Scalar& m11, const Scalar& m22);
};

enum class GHKind { G, Gp, H, Hp };

// Memoized evaluation of the moment series of a circular pair:
//   g1(n) = E((y y*)^n),   g2(n) = E((y* y)^n),
//   G (n,b,k) = E((y y*)^n b (y y*)^k),   G'(n,b,k) = E((y* y)^n y* b y (y* y)^k),
//   H (n,b,k) = E((y* y)^n b (y* y)^k),   H'(n,b,k) = E((y y*)^n y b y* (y y*)^k),
// plus the coordinate functionals for the basis {g2(0), g2(1)}, the maps
// N1, N2, and M0(n,m,k) = E(u g2(n) u* g2(m) u g2(k) u*).
// The middle argument of G/H is decomposed over the basis so memo keys are
// index-only. Purely functional results; single writer per cache.
class RecursionEngine {
public:
  explicit RecursionEngine(CircularParams p);

  const CircularParams& params() const { return p_; }

  DiagElement g1(int n);
  DiagElement g2(int n);
  DiagElement gh(GHKind kind, int n, const DiagElement& b, int k);

  // P1, P2 with b = P1(b) g2(0) + P2(b) g2(1); throws DegenerateBasis when
  // the components of g2(1) coincide.
  struct Functionals {
    DiagElement p1, p2; // coefficient pairs of the linear functionals
  };
  Functionals coord_functionals();
  std::pair<Scalar, Scalar> coords(const DiagElement& b); // (P1(b), P2(b))

  DiagElement N1(const DiagElement& b);
  DiagElement N2(const N2Choice& choice, const DiagElement& b);

  DiagElement M0(const N2Choice& choice, int n, int m, int k);

  // M0(n,m,k) minus its reconstruction from M0 on {0,1}^3 through the
  // coordinate expansion of g2(n), g2(m), g2(k); zero iff the multilinear
  // consistency constraint holds at this triple.
  DiagElement m_expansion_residual(const N2Choice& choice, int n, int m, int k);

private:
  DiagElement gh_basis(GHKind kind, int n, int i, int k);
  CircularParams p_;
  int d_;
  std::vector<DiagElement> g1_, g2_;
  std::map<std::tuple<int, int, int, int>, DiagElement> gh_;
  std::optional<Functionals> fun_;
  std::optional<LinearMapD> alpha12_inv_;
};

} // namespace opfp

#endif
