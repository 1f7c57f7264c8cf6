#include "liederiv/catalog.hpp"

namespace liederiv {

namespace {

using Param = std::optional<GaussianRational>;

GaussianRational require_param(const std::string& key, const Param& a) {
  if (!a) throw MissingParameter(key);
  return *a;
}

LieAlgebra build_l2(const Param&) {
  return LieAlgebraBuilder(2, "L2").bracket(1, 2, {{2, 1}}).build();
}

LieAlgebra build_a31(const Param&) {
  return LieAlgebraBuilder(3, "A3.1").bracket(2, 3, {{1, 1}}).build();
}

LieAlgebra build_a32(const Param&) {
  return LieAlgebraBuilder(3, "A3.2")
      .bracket(1, 3, {{1, 1}})
      .bracket(2, 3, {{1, 1}, {2, 1}})
      .build();
}

LieAlgebra build_a33(const Param&) {
  return LieAlgebraBuilder(3, "A3.3").bracket(1, 3, {{1, 1}}).bracket(2, 3, {{2, 1}}).build();
}

LieAlgebra build_a34(const Param&) {
  return LieAlgebraBuilder(3, "A3.4").bracket(1, 3, {{1, 1}}).bracket(2, 3, {{2, -1}}).build();
}

LieAlgebra build_a35(const Param& a) {
  GaussianRational v = require_param("A3.5", a);
  if (v.is_zero()) throw ParameterViolation("A3.5 requires a != 0");
  return LieAlgebraBuilder(3, "A3.5(" + to_string(v) + ")")
      .bracket(1, 3, {{1, 1}})
      .bracket(2, 3, {{2, v}})
      .build();
}

LieAlgebra build_a38(const Param&, const std::string& name) {
  return LieAlgebraBuilder(3, name)
      .bracket(1, 2, {{1, 1}})
      .bracket(1, 3, {{2, -2}})
      .bracket(2, 3, {{3, 1}})
      .build();
}

LieAlgebra build_l17_9(const Param&) {
  return LieAlgebraBuilder(8, "L17.9")
      .bracket(1, 3, {{5, 1}})
      .bracket(1, 4, {{8, 1}})
      .bracket(1, 5, {{7, 1}})
      .bracket(1, 6, {{4, 1}})
      .bracket(2, 3, {{7, 1}})
      .bracket(3, 5, {{8, 1}})
      .bracket(4, 6, {{7, 1}})
      .build();
}

LieAlgebra build_l17_12(const Param&) {
  return LieAlgebraBuilder(8, "L17.12")
      .bracket(1, 3, {{5, 1}})
      .bracket(1, 4, {{8, 1}})
      .bracket(1, 6, {{4, 1}})
      .bracket(2, 3, {{7, 1}})
      .bracket(2, 6, {{8, 1}})
      .bracket(3, 5, {{8, 1}})
      .bracket(4, 6, {{7, 1}})
      .build();
}

LieAlgebra build_l18_25(const Param& a) {
  GaussianRational v = require_param("L18.25", a);
  return LieAlgebraBuilder(8, "L18.25(" + to_string(v) + ")")
      .bracket(1, 3, {{5, 1}})
      .bracket(1, 4, {{8, -v}})
      .bracket(2, 3, {{7, 1}})
      .bracket(2, 4, {{6, 1}})
      .bracket(3, 5, {{8, 1}})
      .bracket(3, 7, {{6, 1}})
      .build();
}

LieAlgebra build_l17_13(const Param& a) {
  GaussianRational v = require_param("L17.13", a);
  if (v.is_zero()) throw ParameterViolation("L17.13 requires a != 0");
  return LieAlgebraBuilder(8, "L17.13(" + to_string(v) + ")")
      .bracket(1, 3, {{5, v}})
      .bracket(1, 4, {{8, 1}})
      .bracket(1, 6, {{4, 1}})
      .bracket(2, 3, {{7, 1}})
      .bracket(3, 5, {{8, 1}})
      .bracket(3, 6, {{2, 1}})
      .bracket(4, 6, {{7, 1}})
      .build();
}

std::vector<CatalogEntry> make_entries() {
  std::vector<CatalogEntry> entries;
  auto add = [&entries](std::string key, int dim, int arity, std::string constraint,
                        std::function<LieAlgebra(const Param&)> build) {
    entries.push_back({std::move(key), dim, arity, std::move(constraint), std::move(build)});
  };
  add("L2", 2, 0, "", build_l2);
  add("sl2", 3, 0, "", [](const Param& a) { return build_a38(a, "sl2"); });
  add("A3.1", 3, 0, "", build_a31);
  add("A3.2", 3, 0, "", build_a32);
  add("A3.3", 3, 0, "", build_a33);
  add("A3.4", 3, 0, "", build_a34);
  add("A3.5", 3, 1, "a != 0", build_a35);
  add("A3.8", 3, 0, "", [](const Param& a) { return build_a38(a, "A3.8"); });
  add("L17.9", 8, 0, "", build_l17_9);
  add("L17.12", 8, 0, "", build_l17_12);
  add("L18.25", 8, 1, "any a", build_l18_25);
  add("L17.13", 8, 1, "a != 0", build_l17_13);
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = make_entries();
  return entries;
}

LieAlgebra catalog_build(const std::string& key, const std::optional<GaussianRational>& parameter) {
  for (const auto& e : catalog_entries()) {
    if (e.key != key) continue;
    if (e.parameter_arity == 0 && parameter)
      throw ParameterViolation(key + " takes no parameter");
    return e.build(parameter);
  }
  throw UnknownKey(key);
}

LieAlgebra catalog_build_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) return catalog_build(spec);
  return catalog_build(spec.substr(0, colon), parse_scalar(spec.substr(colon + 1)));
}

}  // namespace liederiv
