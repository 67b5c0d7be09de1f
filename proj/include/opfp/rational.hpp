#ifndef OPFP_RATIONAL_HPP
#define OPFP_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

#include "opfp/errors.hpp"

namespace opfp {

// Arbitrary-precision rational, always canonical (lowest terms, positive
// denominator). GMP keeps the invariant for us as long as values are built
// through these helpers.
using Rational = mpq_class;

// Accepts "n" or "p/q" with optional sign; q must be nonzero.
Rational parse_rational(const std::string& s);

// "p/q", or just "p" when the denominator is 1.
std::string rational_str(const Rational& r);

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

} // namespace opfp

#endif
