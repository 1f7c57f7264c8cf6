#ifndef LIEDERIV_ERROR_HPP
#define LIEDERIV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace liederiv {

// Base for all domain errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct ZeroPolynomial : Error {
  ZeroPolynomial() : Error("operation requires a nonzero polynomial") {}
};

struct ZeroResidue : Error {
  ZeroResidue() : Error("cannot invert the zero residue") {}
};

struct InvalidModulus : Error {
  explicit InvalidModulus(const std::string& what) : Error("invalid modulus: " + what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error("dimension mismatch: " + what) {}
};

struct AmbientMismatch : Error {
  AmbientMismatch() : Error("subspaces live in different ambient dimensions") {}
};

struct SingularMatrix : Error {
  SingularMatrix() : Error("matrix is singular") {}
};

struct NotAnIdeal : Error {
  NotAnIdeal() : Error("subspace is not an ideal") {}
};

struct UnknownKey : Error {
  explicit UnknownKey(const std::string& key) : Error("unknown catalog key: " + key) {}
};

struct MissingParameter : Error {
  explicit MissingParameter(const std::string& key) : Error("catalog entry " + key + " requires a parameter") {}
};

struct ParameterViolation : Error {
  explicit ParameterViolation(const std::string& what) : Error("parameter violation: " + what) {}
};

struct KindMismatch : Error {
  KindMismatch() : Error("invariant functions of different kinds cannot be compared") {}
};

}  // namespace liederiv

#endif
