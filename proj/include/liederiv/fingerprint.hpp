#ifndef LIEDERIV_FINGERPRINT_HPP
#define LIEDERIV_FINGERPRINT_HPP

#include <optional>
#include <string>

#include "liederiv/classical.hpp"

namespace liederiv {

struct Witness {
  std::string field;  // e.g. "dim", "series.derived", "tau", "deriv_dims[3]", "psi"
  std::string left, right;
};

struct ComparisonResult {
  bool distinguished = false;
  std::optional<Witness> witness;  // present iff distinguished
};

// Compares invariants cheap-to-expensive (dim, series, tau, the six
// derivation dimensions, phi, psi) and reports the first difference.
// "Indistinguishable" means not separated by these invariants, never
// "isomorphic".
ComparisonResult compare(const LieAlgebra& left, const LieAlgebra& right);

}  // namespace liederiv

#endif
