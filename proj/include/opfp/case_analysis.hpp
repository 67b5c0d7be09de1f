#ifndef OPFP_CASE_ANALYSIS_HPP
#define OPFP_CASE_ANALYSIS_HPP

#include <array>
#include <cstdint>
#include <functional>

#include "opfp/recursions.hpp"

namespace opfp {

// Which coordinate automorphism of C^2 conjugates alpha_{(1,2)} into
// alpha_{(2,1)} for a tracial pair (q, R): Identity when q r12 = (1-q) r21,
// else Flip when r11 = r22 and q = 1/2, else None. Identity wins ties.
enum class AutoKind { Identity, Flip, None };
AutoKind normalizing_automorphism(const Scalar& q, const LinearMapD& R);
std::string auto_kind_str(AutoKind k);

inline CircularParams rescale(const CircularParams& p, const Scalar& t) { return p.rescaled(t); }

// Parameter classes left open once no normalizing automorphism exists and
// the degree-2 and degree-3 linear-combination constraints hold.
struct CaseLabel {
  enum class Kind { I, II, III, NoCase } kind = Kind::NoCase;
  int subcase = 0; // 1..4 when kind == III

  std::string str() const;
  friend bool operator==(const CaseLabel& a, const CaseLabel& b) {
    return a.kind == b.kind && a.subcase == b.subcase;
  }
};

// Numeric classification; requires normalizing_automorphism(q, R) == None.
CaseLabel classify_case(const Scalar& q, const LinearMapD& R);

// The four trace-compatibility relations in (q, r11, r12, r21, r22, s11,
// s12, s21, s22):  r11 - s11, r22 - s22, q r12 - (1-q) s21, (1-q) r21 - q s12.
std::vector<Polynomial> selim_relations();

// Coefficient polynomials of tau(alpha12(b1) b2) - tau(b1 alpha21(b2)) on
// basis pairs, in row-major (b1, b2) order. Each equals a selim relation up
// to a factor of q or 1-q.
std::vector<Polynomial> traciality_coefficient_polys();

// Cleared numerators of g1(n) - P1(g2(n)) g1(0) - P2(g2(n)) g1(1) for fully
// symbolic parameters (n in {2, 3}); the side condition (the coordinate
// functionals' denominator) is returned separately as factors.
struct LinConstraints {
  int n = 0;
  std::vector<Polynomial> polys;               // one per component, primitive
  std::vector<Polynomial> denominator_factors; // nonvanishing side conditions
};
LinConstraints lin_constraint_polys(int n);

// Rational lattice: multiples of 1/den inside each variable's range
// (q in (0,1) strict, r in [0, r_max], m in [0,1]).
struct GridSpec {
  long den = 16;
  long r_max = 3;
};

struct SolveStep {
  std::array<int, 3> triple{};
  std::string target;
  bool linear = false;
  int solved_from_component = -1;
  std::string solution;
  std::string expected;
  bool matches_expected = false;
  bool annihilates = false; // back-substitution kills every component
};

struct BranchStep {
  std::array<int, 3> triple{};
  std::string substitution;
  bool annihilates = false;
  bool factor_divides = false; // branch polynomial divides each numerator
  std::string note;
};

struct GridStep {
  std::array<int, 3> triple{};
  std::vector<std::string> free_vars;
  bool identically_zero = false; // residual vanishes as a rational function
  long points = 0;
  long admissible = 0;
  long denominator_hits = 0; // admissible points where a denominator vanished
  long zeros = 0;            // admissible common zeros of all components
  std::vector<std::string> zero_points;
};

// Scripted reproduction of one contradiction branch: normalizations, exact
// linear solves in single m-parameters, branch-substitution evidence, and a
// terminal grid refutation. Grid results are evidence, not proof.
struct SubcaseReport {
  std::string id;
  std::vector<std::string> substitutions;
  std::vector<SolveStep> solves;
  std::vector<BranchStep> branches;
  std::vector<GridStep> grids;
  bool identities_ok = false; // every solve/branch met its expected identity
  bool refutation_ok = false; // terminal grid found zero admissible solutions
  bool ok = false;            // identities_ok && refutation_ok
  std::string notes;
};

// id: "I", "II", "III.1", "III.2", "III.3", "III.4".
SubcaseReport subcase_report(const std::string& id, const GridSpec& grid);

struct CoverageReport {
  std::uint64_t seed = 0;
  int samples = 0;
  int auto_skipped = 0;   // tuples with a normalizing automorphism
  int degenerate = 0;     // g2(1) proportional to the unit
  int satisfiers = 0;     // both lin constraints hold
  int case_i = 0, case_ii = 0, case_iii = 0, nocase = 0;
  std::vector<std::string> nocase_points; // expected empty
};

// Draws rational tuples (q in (0,1), r in [0,3], denominators <= 16),
// keeps those without a normalizing automorphism, tests the n = 2, 3
// constraints numerically and classifies the satisfiers.
CoverageReport sample_case_coverage(int count, std::uint64_t seed);

} // namespace opfp

#endif
