#include "opfp/recursions.hpp"

namespace opfp {

CircularParams CircularParams::make(const Scalar& q, const LinearMapD& R) {
  if (R.dim() != 2) throw DimensionMismatch("CircularParams: R must be 2x2");
  if (q.is_rational()) {
    const Rational& qv = q.rational_value();
    if (qv <= 0 || qv >= 1) throw DomainError("CircularParams: q must lie in (0,1)");
  }
  if (!R.entrywise_nonnegative())
    throw DomainError("CircularParams: cumulant entries must be nonnegative");
  CircularParams p{q, R, LinearMapD(2)};
  const Scalar one(1);
  p.alpha21.at(0, 0) = R.at(0, 0);
  p.alpha21.at(0, 1) = (one - q) / q * R.at(1, 0);
  p.alpha21.at(1, 0) = q / (one - q) * R.at(0, 1);
  p.alpha21.at(1, 1) = R.at(1, 1);
  return p;
}

CircularParams CircularParams::symbolic() {
  LinearMapD R(2);
  R.at(0, 0) = Scalar::variable("r11");
  R.at(0, 1) = Scalar::variable("r12");
  R.at(1, 0) = Scalar::variable("r21");
  R.at(1, 1) = Scalar::variable("r22");
  return make(Scalar::variable("q"), R);
}

CircularParams CircularParams::rescaled(const Scalar& t) const {
  if (!t.is_rational() || t.rational_value() <= 0)
    throw DomainError("CircularParams::rescaled: t must be a positive rational");
  return make(q, (t * t) * alpha12);
}

N2Choice N2Choice::parametric(const Scalar& m11, const Scalar& m22) {
  for (const Scalar* m : {&m11, &m22})
    if (m->is_rational() && (m->rational_value() < 0 || m->rational_value() > 1))
      throw DomainError("N2Choice: parametric entries must lie in [0,1]");
  return {Mode::Parametric, m11, m22};
}

RecursionEngine::RecursionEngine(CircularParams p) : p_(std::move(p)), d_(p_.alpha12.dim()) {
  g1_.push_back(DiagElement::unit(d_));
  g2_.push_back(DiagElement::unit(d_));
}

DiagElement RecursionEngine::g1(int n) {
  if (n < 0) throw DomainError("g1: negative index");
  while (static_cast<int>(g1_.size()) <= n) {
    const int m = static_cast<int>(g1_.size());
    DiagElement acc(d_);
    for (int i = 1; i <= m; ++i) acc += p_.alpha12.apply(g2(i - 1)) * g1(m - i);
    g1_.push_back(acc);
  }
  return g1_[n];
}

DiagElement RecursionEngine::g2(int n) {
  if (n < 0) throw DomainError("g2: negative index");
  while (static_cast<int>(g2_.size()) <= n) {
    const int m = static_cast<int>(g2_.size());
    DiagElement acc(d_);
    for (int i = 1; i <= m; ++i) acc += p_.alpha21.apply(g1(i - 1)) * g2(m - i);
    g2_.push_back(acc);
  }
  return g2_[n];
}

DiagElement RecursionEngine::gh(GHKind kind, int n, const DiagElement& b, int k) {
  if (n < 0 || k < 0) throw DomainError("gh: negative index");
  DiagElement acc(d_);
  for (int i = 0; i < d_; ++i) {
    if (b[i].is_zero()) continue;
    acc += b[i] * gh_basis(kind, n, i, k);
  }
  return acc;
}

DiagElement RecursionEngine::gh_basis(GHKind kind, int n, int i, int k) {
  const auto key = std::make_tuple(static_cast<int>(kind), n, i, k);
  if (auto it = gh_.find(key); it != gh_.end()) return it->second;

  const DiagElement e = DiagElement::basis(d_, i);
  DiagElement out(d_);
  switch (kind) {
    case GHKind::G:
      if (n == 0) {
        out = e * g1(k);
      } else {
        for (int t = 1; t <= n; ++t) out += p_.alpha12.apply(g2(t - 1)) * gh_basis(GHKind::G, n - t, i, k);
        for (int j = 1; j <= k; ++j)
          out += p_.alpha12.apply(gh_basis(GHKind::Gp, n - 1, i, j - 1)) * g1(k - j);
      }
      break;
    case GHKind::Gp:
      if (n == 0) {
        for (int j = 0; j <= k; ++j) out += p_.alpha21.apply(e * g1(j)) * g2(k - j);
      } else {
        for (int t = 1; t <= n; ++t) out += p_.alpha21.apply(g1(t - 1)) * gh_basis(GHKind::Gp, n - t, i, k);
        for (int j = 0; j <= k; ++j) out += p_.alpha21.apply(gh_basis(GHKind::G, n, i, j)) * g2(k - j);
      }
      break;
    case GHKind::H:
      if (n == 0) {
        out = e * g2(k);
      } else {
        for (int t = 1; t <= n; ++t) out += p_.alpha21.apply(g1(t - 1)) * gh_basis(GHKind::H, n - t, i, k);
        for (int j = 1; j <= k; ++j)
          out += p_.alpha21.apply(gh_basis(GHKind::Hp, n - 1, i, j - 1)) * g2(k - j);
      }
      break;
    case GHKind::Hp:
      if (n == 0) {
        for (int j = 0; j <= k; ++j) out += p_.alpha12.apply(e * g2(j)) * g1(k - j);
      } else {
        for (int t = 1; t <= n; ++t) out += p_.alpha12.apply(g2(t - 1)) * gh_basis(GHKind::Hp, n - t, i, k);
        for (int j = 0; j <= k; ++j) out += p_.alpha12.apply(gh_basis(GHKind::H, n, i, j)) * g1(k - j);
      }
      break;
  }
  gh_.emplace(key, out);
  return out;
}

RecursionEngine::Functionals RecursionEngine::coord_functionals() {
  if (fun_) return *fun_;
  if (d_ != 2) throw DomainError("coord_functionals: only defined over C^2");
  const DiagElement g21 = g2(1);
  const Scalar delta = g21[0] - g21[1];
  if (delta.is_zero())
    throw DegenerateBasis("coord_functionals: g2(1) has equal components, {g2(0), g2(1)} is not a basis");
  // P2((x,y)) = (x - y)/delta, P1((x,y)) = x - P2((x,y)) g2(1)_1.
  const Scalar inv = Scalar(1) / delta;
  Functionals f{DiagElement({-g21[1] * inv, g21[0] * inv}), DiagElement({inv, -inv})};
  fun_ = f;
  return f;
}

std::pair<Scalar, Scalar> RecursionEngine::coords(const DiagElement& b) {
  const Functionals f = coord_functionals();
  Scalar p1(0), p2(0);
  for (int i = 0; i < d_; ++i) {
    p1 += f.p1[i] * b[i];
    p2 += f.p2[i] * b[i];
  }
  return {p1, p2};
}

DiagElement RecursionEngine::N1(const DiagElement& b) {
  const auto [p1, p2] = coords(b);
  return p1 * g1(0) + p2 * g1(1);
}

DiagElement RecursionEngine::N2(const N2Choice& choice, const DiagElement& b) {
  if (choice.mode == N2Choice::Mode::Parametric) {
    LinearMapD n2(2);
    n2.at(0, 0) = choice.m11;
    n2.at(0, 1) = Scalar(1) - choice.m11;
    n2.at(1, 0) = Scalar(1) - choice.m22;
    n2.at(1, 1) = choice.m22;
    return n2.apply(b);
  }
  if (!alpha12_inv_) alpha12_inv_ = p_.alpha12.inverse(); // throws SingularMap
  return alpha12_inv_->apply(N1(p_.alpha21.apply(b)));
}

DiagElement RecursionEngine::M0(const N2Choice& choice, int n, int m, int k) {
  const DiagElement n2g2m = N2(choice, g2(m));
  return gh(GHKind::G, n, g2(m), k) - N1(gh(GHKind::H, n, n2g2m, k)) +
         N1(g2(n) * n2g2m * g2(k));
}

DiagElement RecursionEngine::m_expansion_residual(const N2Choice& choice, int n, int m, int k) {
  const int idx[3] = {n, m, k};
  Scalar c[3], d[3];
  for (int t = 0; t < 3; ++t) {
    auto [p1, p2] = coords(g2(idx[t]));
    c[t] = p1;
    d[t] = p2;
  }
  DiagElement expansion(d_);
  for (int mask = 0; mask < 8; ++mask) {
    const int b1 = (mask >> 2) & 1, b2 = (mask >> 1) & 1, b3 = mask & 1;
    const Scalar w = (b1 ? d[0] : c[0]) * (b2 ? d[1] : c[1]) * (b3 ? d[2] : c[2]);
    if (w.is_zero()) continue;
    expansion += w * M0(choice, b1, b2, b3);
  }
  return M0(choice, n, m, k) - expansion;
}

} // namespace opfp
