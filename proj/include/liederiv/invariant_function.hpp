#ifndef LIEDERIV_INVARIANT_FUNCTION_HPP
#define LIEDERIV_INVARIANT_FUNCTION_HPP

#include <string>
#include <variant>
#include <vector>

#include "liederiv/derivation.hpp"
#include "liederiv/lie_algebra.hpp"

namespace liederiv {

// A point (or an algebraic bundle of conjugate points) where the invariant
// function leaves its generic value.
struct ExceptionalPoint {
  // Explicit Q(i) point, or a monic squarefree modulus without Q(i) roots
  // standing for all of its roots at once.
  std::variant<GaussianRational, Poly> location;
  int value;

  bool is_explicit() const { return std::holds_alternative<GaussianRational>(location); }
  const GaussianRational& point() const { return std::get<GaussianRational>(location); }
  const Poly& modulus() const { return std::get<Poly>(location); }

  friend bool operator==(const ExceptionalPoint&, const ExceptionalPoint&) = default;
};

enum class InvariantKind { Psi, Phi };

// Piecewise-constant function C -> N: a generic value plus finitely many
// exceptional points, canonically ordered (explicit points by (re, im),
// then bundles by degree and coefficients).
struct InvariantFunction {
  InvariantKind kind;
  int generic_value = 0;
  std::vector<ExceptionalPoint> exceptional;

  friend bool operator==(const InvariantFunction&, const InvariantFunction&) = default;
};

// psi(a) = dim D(a,1,1), phi(a) = dim D(a,1,0), as complete functions.
InvariantFunction psi(const LieAlgebra& algebra);
InvariantFunction phi(const LieAlgebra& algebra);

int evaluate(const InvariantFunction& f, const GaussianRational& point);

// Structural equality of canonical forms; throws KindMismatch.
bool functions_equal(const InvariantFunction& f, const InvariantFunction& g);

// "{0 -> 19, -2 -> 17, generic 16}"
std::string to_string(const InvariantFunction& f);

namespace detail {
// Shared by psi/phi: full level-set analysis of the pencil D(x, beta, gamma).
InvariantFunction invariant_function_of_pencil(const LieAlgebra& algebra, InvariantKind kind,
                                               const GaussianRational& beta,
                                               const GaussianRational& gamma);
}  // namespace detail

}  // namespace liederiv

#endif
