#ifndef LIEDERIV_CLASSICAL_HPP
#define LIEDERIV_CLASSICAL_HPP

#include <array>

#include "liederiv/invariant_function.hpp"
#include "liederiv/lie_algebra.hpp"

namespace liederiv {

// Dimensions of the derived, lower central and upper central series, each
// listed to stabilization (the first repeated value is not listed).
struct SeriesDims {
  std::vector<int> derived;        // starts at dim L
  std::vector<int> lower_central;  // starts at dim L
  std::vector<int> upper_central;  // starts at dim C(L)

  bool solvable() const { return derived.empty() || derived.back() == 0; }
  bool nilpotent() const { return lower_central.empty() || lower_central.back() == 0; }
  friend bool operator==(const SeriesDims&, const SeriesDims&) = default;
};

// span of [u, v] over basis pairs of the two subspaces
Subspace subalgebra_bracket_span(const LieAlgebra& algebra, const Subspace& u, const Subspace& v);

Subspace center(const LieAlgebra& algebra);

SeriesDims series(const LieAlgebra& algebra);

// Number of formal Casimir invariants: n minus the generic rank of the
// antisymmetric matrix C(x)_ij = sum_k c_ij^k x_k.
int casimir_count(const LieAlgebra& algebra);

// The full fingerprint: series dims, tau, six derivation-space dimensions
// [dim D(1,1,1), dim D(0,1,1), dim D(1,1,0), dim(D(1,1,1) cap D(0,1,1)),
//  dim D(1,1,-1), dim D(0,1,-1)], psi and phi.
struct InvariantRecord {
  int dim;
  SeriesDims series;
  int tau;
  std::array<int, 6> deriv_dims;
  InvariantFunction psi;
  InvariantFunction phi;
};

InvariantRecord invariant_record(const LieAlgebra& algebra);

// "(310)(310)(13) 1 [6, 6, 3, 5, 3, 4]"; dim lists are concatenated digits
// when every entry is a single digit, comma-separated otherwise.
std::string render_record_summary(const InvariantRecord& record);

}  // namespace liederiv

#endif
