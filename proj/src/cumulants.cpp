#include "opfp/cumulants.hpp"

#include <algorithm>

namespace opfp {

CumulantFamily CumulantFamily::circular(const LinearMapD& a12, const LinearMapD& a21) {
  if (a12.dim() != a21.dim()) throw DimensionMismatch("CumulantFamily::circular");
  if (!a12.entrywise_nonnegative() || !a21.entrywise_nonnegative())
    throw DomainError("CumulantFamily::circular: cumulant maps must have nonnegative entries");
  CumulantFamily fam(a12.dim());
  fam.set(Word{1, 2}, MultilinearMapD::from_linear(a12));
  fam.set(Word{2, 1}, MultilinearMapD::from_linear(a21));
  return fam;
}

const MultilinearMapD* CumulantFamily::find(const Word& j) const {
  auto it = maps_.find(j);
  return it == maps_.end() ? nullptr : &it->second;
}

void CumulantFamily::set(const Word& j, MultilinearMapD m) {
  if (m.order() != static_cast<int>(j.size()) - 1)
    throw ArityMismatch("CumulantFamily::set: map order must be word length - 1");
  if (m.is_zero()) {
    maps_.erase(j);
    return;
  }
  maps_.insert_or_assign(j, std::move(m));
}

DiagElement CumulantFamily::apply(const Word& j, const std::vector<DiagElement>& bargs) const {
  if (bargs.size() + 1 != j.size()) throw ArityMismatch("CumulantFamily::apply");
  const MultilinearMapD* m = find(j);
  if (!m) return DiagElement(d_);
  return m->apply(bargs);
}

namespace {

// Index (0-based) of the leftmost block of pi that is an interval; a
// noncrossing partition always has one.
int leftmost_interval_block(const NCPartition& pi) {
  for (std::size_t b = 0; b < pi.blocks.size(); ++b) {
    const auto& blk = pi.blocks[b];
    if (blk.back() - blk.front() + 1 == static_cast<int>(blk.size())) return static_cast<int>(b);
  }
  throw Error("hat_alpha: no interval block in a noncrossing partition");
}

} // namespace

DiagElement hat_alpha(const NCPartition& pi, const Word& j,
                      const std::vector<DiagElement>& bargs, const CumulantFamily& fam) {
  const int n = static_cast<int>(j.size());
  if (pi.n != n || static_cast<int>(bargs.size()) != n - 1)
    throw ArityMismatch("hat_alpha: word/partition/coefficients size mismatch");

  if (pi.is_full()) return fam.apply(j, bargs);

  const int bi = leftmost_interval_block(pi);
  const auto& blk = pi.blocks[bi];
  const int p = blk.front();                  // 1-based start of the peeled block
  const int q = static_cast<int>(blk.size()); // its length

  // alpha_{j''} on the block's inner coefficients b_p .. b_{p+q-2}.
  const Word jxx = restrict_word(j, blk);
  std::vector<DiagElement> inner;
  inner.reserve(q - 1);
  for (int t = p; t <= p + q - 2; ++t) inner.push_back(bargs[t - 1]);
  const DiagElement a_val = fam.apply(jxx, inner);

  // Reduced word j' and partition pi' on the remaining letters, renumbered.
  Word jp;
  for (int t = 1; t <= n; ++t)
    if (t < p || t > p + q - 1) jp.push_back(j[t - 1]);
  NCPartition pip;
  pip.n = n - q;
  for (std::size_t b = 0; b < pi.blocks.size(); ++b) {
    if (static_cast<int>(b) == bi) continue;
    std::vector<int> nb;
    for (int x : pi.blocks[b]) nb.push_back(x > p + q - 1 ? x - q : x);
    pip.blocks.push_back(std::move(nb));
  }

  if (p >= 2 && p + q - 1 < n) {
    // Interior block: splice b_{p-1} alpha(...) b_{p+q-1} into the list.
    std::vector<DiagElement> nb;
    for (int t = 1; t <= p - 2; ++t) nb.push_back(bargs[t - 1]);
    nb.push_back(bargs[p - 2] * a_val * bargs[p + q - 2]);
    for (int t = p + q; t <= n - 1; ++t) nb.push_back(bargs[t - 1]);
    return hat_alpha(pip, jp, nb, fam);
  }
  if (p >= 2) {
    // Suffix block: hat(pi')[b_1..b_{p-2}] b_{p-1} alpha(...).
    std::vector<DiagElement> nb;
    for (int t = 1; t <= p - 2; ++t) nb.push_back(bargs[t - 1]);
    return hat_alpha(pip, jp, nb, fam) * bargs[p - 2] * a_val;
  }
  // Prefix block (p = 1, q < n): alpha(...) b_q hat(pi')[b_{q+1}..b_{n-1}].
  std::vector<DiagElement> nb;
  for (int t = q + 1; t <= n - 1; ++t) nb.push_back(bargs[t - 1]);
  return a_val * bargs[q - 1] * hat_alpha(pip, jp, nb, fam);
}

namespace {

// The engine sums over NC(n) constantly; enumerate each length once.
const std::vector<NCPartition>& cached_noncrossing(int n) {
  static std::vector<std::vector<NCPartition>> cache(kEnumerationGuard + 1);
  if (cache[n].empty()) cache[n] = enumerate_noncrossing(n);
  return cache[n];
}

} // namespace

DiagElement moment_from_cumulants(const CumulantFamily& fam, const Word& j,
                                  const std::vector<DiagElement>& bargs) {
  const int n = static_cast<int>(j.size());
  if (n < 1 || n > kEnumerationGuard)
    throw GuardExceeded("moment_from_cumulants: word length outside enumeration guard");
  if (static_cast<int>(bargs.size()) != n - 1) throw ArityMismatch("moment_from_cumulants");
  DiagElement acc(fam.dim());
  for (const auto& pi : cached_noncrossing(n)) {
    // Partitions with any block carrying a vanishing cumulant contribute zero.
    bool alive = true;
    for (const auto& blk : pi.blocks)
      if (!fam.find(restrict_word(j, blk))) {
        alive = false;
        break;
      }
    if (!alive) continue;
    acc += hat_alpha(pi, j, bargs, fam);
  }
  return acc;
}

DiagElement ElementModel::moment_inner(const Word& j, const std::vector<DiagElement>& inner) const {
  if (inner.size() + 1 != j.size()) throw ArityMismatch("moment_inner");
  std::vector<DiagElement> b;
  b.reserve(j.size() + 1);
  b.push_back(DiagElement::unit(dim()));
  for (const auto& x : inner) b.push_back(x);
  b.push_back(DiagElement::unit(dim()));
  return moment(j, b);
}

DiagElement ElementModel::moment_plain(const Word& j) const {
  std::vector<DiagElement> b(j.size() + 1, DiagElement::unit(dim()));
  return moment(j, b);
}

DiagElement CumulantModel::moment(const Word& j, const std::vector<DiagElement>& b) const {
  if (b.size() != j.size() + 1) throw ArityMismatch("CumulantModel::moment");
  std::vector<DiagElement> inner(b.begin() + 1, b.end() - 1);
  // Outer coefficients pull out componentwise over diagonal B.
  return b.front() * moment_from_cumulants(fam_, j, inner) * b.back();
}

DiagElement ConstantModel::moment(const Word& j, const std::vector<DiagElement>& b) const {
  if (b.size() != j.size() + 1) throw ArityMismatch("ConstantModel::moment");
  DiagElement acc = b.front();
  for (std::size_t t = 0; t < j.size(); ++t) acc = acc * b_ * b[t + 1];
  return acc;
}

CumulantFamily cumulants_from_moments(const ElementModel& model, int max_order) {
  if (max_order < 1 || max_order > kEnumerationGuard)
    throw GuardExceeded("cumulants_from_moments: order outside enumeration guard");
  const int d = model.dim();
  CumulantFamily fam(d);

  for (int n = 1; n <= max_order; ++n) {
    const auto& partitions = cached_noncrossing(n);
    // All words over {1,2} of length n.
    std::vector<Word> words;
    words.push_back({});
    for (int t = 0; t < n; ++t) {
      std::vector<Word> next;
      for (const auto& w : words)
        for (std::uint8_t l : {std::uint8_t(1), std::uint8_t(2)}) {
          Word w2 = w;
          w2.push_back(l);
          next.push_back(std::move(w2));
        }
      words = std::move(next);
    }

    for (const auto& j : words) {
      MultilinearMapD map(d, n - 1);
      std::vector<int> idx(n - 1, 0);
      while (true) {
        std::vector<DiagElement> bargs;
        bargs.reserve(n - 1);
        for (int t = 0; t < n - 1; ++t) bargs.push_back(DiagElement::basis(d, idx[t]));
        DiagElement val = model.moment_inner(j, bargs);
        for (const auto& pi : partitions) {
          if (pi.is_full()) continue;
          bool alive = true;
          for (const auto& blk : pi.blocks)
            if (!fam.find(restrict_word(j, blk))) {
              alive = false;
              break;
            }
          if (!alive) continue;
          val = val - hat_alpha(pi, j, bargs, fam);
        }
        for (int i = 0; i < d; ++i) map.at(i, idx) = val[i];
        int p = n - 2;
        while (p >= 0 && idx[p] == d - 1) idx[p--] = 0;
        if (p < 0) break;
        ++idx[p];
      }
      fam.set(j, std::move(map));
    }
  }
  return fam;
}

std::vector<Scalar> traciality_defects(const TraceWeights& w, const LinearMapD& a12,
                                       const LinearMapD& a21) {
  const int d = w.dim();
  if (a12.dim() != d || a21.dim() != d) throw DimensionMismatch("traciality_defects");
  std::vector<Scalar> defects;
  defects.reserve(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const DiagElement bi = DiagElement::basis(d, i), bj = DiagElement::basis(d, j);
      defects.push_back(trace(w, a12.apply(bi) * bj) - trace(w, bi * a21.apply(bj)));
    }
  return defects;
}

bool check_traciality(const TraceWeights& w, const LinearMapD& a12, const LinearMapD& a21) {
  for (const auto& s : traciality_defects(w, a12, a21))
    if (!s.is_zero()) return false;
  return true;
}

namespace {

// Coefficient pools for word-level checks: basis vectors plus the unit.
std::vector<DiagElement> basis_plus_unit(int d) {
  std::vector<DiagElement> pool;
  for (int i = 0; i < d; ++i) pool.push_back(DiagElement::basis(d, i));
  pool.push_back(DiagElement::unit(d));
  return pool;
}

// Iterates assignments of `slots` coefficients over the pool; returns false
// when exhausted.
bool next_tuple(std::vector<int>& idx, int base) {
  int p = static_cast<int>(idx.size()) - 1;
  while (p >= 0 && idx[p] == base - 1) idx[p--] = 0;
  if (p < 0) return false;
  ++idx[p];
  return true;
}

std::vector<Word> all_words(int len) {
  std::vector<Word> words{{}};
  for (int t = 0; t < len; ++t) {
    std::vector<Word> next;
    for (const auto& w : words)
      for (std::uint8_t l : {std::uint8_t(1), std::uint8_t(2)}) {
        Word w2 = w;
        w2.push_back(l);
        next.push_back(std::move(w2));
      }
    words = std::move(next);
  }
  return words;
}

} // namespace

DiagElement centered_block_expectation(const ElementModel& model, const Word& eps,
                                       const std::vector<DiagElement>& coeffs) {
  if (coeffs.size() != eps.size()) throw ArityMismatch("centered_block_expectation");
  const int d = model.dim();
  const auto blocks = max_alt_interval_partition(eps);
  const int m = static_cast<int>(blocks.size());

  // E(X_V) per block.
  std::vector<DiagElement> block_expect;
  block_expect.reserve(m);
  for (const auto& blk : blocks) {
    Word w;
    std::vector<DiagElement> b{DiagElement::unit(d)};
    for (int idx : blk) {
      w.push_back(eps[idx - 1]);
      b.push_back(coeffs[idx - 1]);
    }
    block_expect.push_back(model.moment(w, b));
  }

  // Expand prod_V (X_V - E(X_V)) over subsets; scalars fold into junctions.
  DiagElement acc(d);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    Word w;
    std::vector<DiagElement> b{DiagElement::unit(d)};
    for (int v = 0; v < m; ++v) {
      if (mask & (1u << v)) {
        for (int idx : blocks[v]) {
          w.push_back(eps[idx - 1]);
          b.push_back(coeffs[idx - 1]);
        }
      } else {
        b.back() = b.back() * (-block_expect[v]);
      }
    }
    acc += w.empty() ? b.back() : model.moment(w, b);
  }
  return acc;
}

CheckReport check_r_diagonal_moments(const ElementModel& model, int max_len) {
  if (max_len > 6) throw GuardExceeded("check_r_diagonal_moments: max_len > 6");
  const int d = model.dim();
  const auto pool = basis_plus_unit(d);

  // (i) odd alternating moments E(a b1 a* b2 a ... a) vanish.
  for (int len = 1; len <= max_len; len += 2) {
    Word j;
    for (int t = 0; t < len; ++t) j.push_back(t % 2 == 0 ? 1 : 2);
    std::vector<int> idx(len - 1, 0);
    do {
      std::vector<DiagElement> inner;
      for (int t = 0; t < len - 1; ++t) inner.push_back(pool[idx[t]]);
      const DiagElement val = model.moment_inner(j, inner);
      if (!val.is_zero()) {
        std::vector<DiagElement> coeffs = inner;
        return {false, Witness{"odd-alternating", j, coeffs, val}};
      }
    } while (next_tuple(idx, static_cast<int>(pool.size())));
  }

  // (ii) sigma(eps) centered-block conditions.
  for (int len = 1; len <= max_len; ++len) {
    for (const auto& eps : all_words(len)) {
      std::vector<int> idx(len, 0);
      do {
        std::vector<DiagElement> coeffs;
        for (int t = 0; t < len; ++t) coeffs.push_back(pool[idx[t]]);
        const DiagElement val = centered_block_expectation(model, eps, coeffs);
        if (!val.is_zero()) return {false, Witness{"centered-block", eps, coeffs, val}};
      } while (next_tuple(idx, static_cast<int>(pool.size())));
    }
  }
  return {true, std::nullopt};
}

CheckReport check_balanced(const ElementModel& model, int max_len) {
  if (max_len > 6) throw GuardExceeded("check_balanced: max_len > 6");
  const int d = model.dim();
  const auto pool = basis_plus_unit(d);
  for (int len = 1; len <= max_len; ++len) {
    for (const auto& eps : all_words(len)) {
      const int ones = static_cast<int>(std::count(eps.begin(), eps.end(), 1));
      if (2 * ones == len) continue; // balanced word
      std::vector<int> idx(std::max(len - 1, 0), 0);
      do {
        std::vector<DiagElement> inner;
        for (int t = 0; t < len - 1; ++t) inner.push_back(pool[idx[t]]);
        const DiagElement val = model.moment_inner(eps, inner);
        if (!val.is_zero()) return {false, Witness{"unbalanced", eps, inner, val}};
      } while (next_tuple(idx, static_cast<int>(pool.size())));
    }
  }
  return {true, std::nullopt};
}

bool check_haar(const ElementModel& model, int K) {
  for (int k = 1; k <= K; ++k) {
    if (!model.moment_plain(Word(k, 1)).is_zero()) return false;
    if (!model.moment_plain(Word(k, 2)).is_zero()) return false;
  }
  return true;
}

bool check_auto_condition(const LinearMapD& a12, const LinearMapD& a21, const Permutation& theta) {
  const int d = a12.dim();
  if (static_cast<int>(theta.size()) != d || a21.dim() != d)
    throw DimensionMismatch("check_auto_condition");
  const Permutation inv = perm_inverse(theta);
  // (theta o a12 o theta)(i, j) = a12[theta(i)][theta^{-1}(j)].
  LinearMapD conj(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) conj.at(i, j) = a12.at(theta[i], inv[j]);
  return conj == a21;
}

DiagElement even_part_moments(const ElementModel& model, const Permutation& theta,
                              const std::vector<DiagElement>& bargs) {
  if (bargs.size() % 2 == 0) throw ArityMismatch("even_part_moments: need 2n-1 coefficients");
  const int n = static_cast<int>(bargs.size() + 1) / 2;
  const Permutation inv = perm_inverse(theta);
  Word j;
  std::vector<DiagElement> b{DiagElement::unit(model.dim())};
  for (int t = 1; t <= 2 * n; ++t) {
    j.push_back(t % 2 == 1 ? 2 : 1); // a* a a* a ...
    if (t < 2 * n)
      b.push_back(t % 2 == 1 ? apply_perm(inv, bargs[t - 1]) : bargs[t - 1]);
  }
  b.push_back(DiagElement::unit(model.dim()));
  return model.moment(j, b);
}

bool check_theta_moment_identity(const ElementModel& model, const Permutation& theta, int K) {
  if (K > 6) throw GuardExceeded("check_theta_moment_identity: K > 6");
  const Permutation inv = perm_inverse(theta);
  for (int k = 1; k <= K; ++k) {
    Word w1, w2;
    for (int t = 0; t < k; ++t) {
      w1.push_back(1);
      w1.push_back(2);
      w2.push_back(2);
      w2.push_back(1);
    }
    const DiagElement lhs = model.moment_plain(w1);
    const DiagElement rhs = apply_perm(inv, model.moment_plain(w2));
    if (lhs != rhs) return false;
  }
  return true;
}

} // namespace opfp
