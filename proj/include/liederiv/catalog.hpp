#ifndef LIEDERIV_CATALOG_HPP
#define LIEDERIV_CATALOG_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "liederiv/lie_algebra.hpp"

namespace liederiv {

struct CatalogEntry {
  std::string key;
  int dim;
  int parameter_arity;  // 0 or 1
  std::string parameter_constraint;
  std::function<LieAlgebra(const std::optional<GaussianRational>&)> build;
};

const std::vector<CatalogEntry>& catalog_entries();

// Throws UnknownKey / MissingParameter / ParameterViolation.
LieAlgebra catalog_build(const std::string& key, const std::optional<GaussianRational>& parameter = {});

// "KEY" or "KEY:PARAM" with the exact scalar syntax, e.g. "L18.25:2".
LieAlgebra catalog_build_spec(const std::string& spec);

}  // namespace liederiv

#endif
