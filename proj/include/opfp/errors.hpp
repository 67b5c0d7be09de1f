#ifndef OPFP_ERRORS_HPP
#define OPFP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace opfp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vector/matrix dimensions disagree.
struct DimensionMismatch : Error {
  using Error::Error;
};

// Wrong number of arguments for a multilinear map or word.
struct ArityMismatch : Error {
  using Error::Error;
};

// A linear map with vanishing determinant was asked for its inverse.
struct SingularMap : Error {
  using Error::Error;
};

// g2(0), g2(1) fail to span: coordinate functionals are undefined.
struct DegenerateBasis : Error {
  using Error::Error;
};

// Enumeration or word-length guard exceeded.
struct GuardExceeded : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

// Value outside its admissible range (negative cumulant entry, q outside (0,1), ...).
struct DomainError : Error {
  using Error::Error;
};

// A numeric-only operation (comparison, grid evaluation) hit a symbolic scalar.
struct SymbolicValue : Error {
  using Error::Error;
};

} // namespace opfp

#endif
