#ifndef LIEDERIV_ALGEBRA_JSON_HPP
#define LIEDERIV_ALGEBRA_JSON_HPP

#include <iosfwd>
#include <string>

#include "liederiv/lie_algebra.hpp"

namespace liederiv {

// Algebra file format (JSON):
//   {"name": str, "dim": int,
//    "brackets": [{"i": int, "j": int, "terms": [{"k": int, "c": scalar}]}]}
// Indices 1-based with i < j; scalars in the exact text syntax; unlisted
// brackets are zero; duplicate (i, j) pairs are rejected.
LieAlgebra algebra_from_json_text(const std::string& text);
LieAlgebra algebra_from_json_file(const std::string& path);
std::string algebra_to_json_text(const LieAlgebra& algebra);

}  // namespace liederiv

#endif
