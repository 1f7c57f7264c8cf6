#include "liederiv/fingerprint.hpp"

namespace liederiv {

namespace {

std::string render_list(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(v[k]);
  }
  return out + ")";
}

ComparisonResult distinguished(std::string field, std::string left, std::string right) {
  return {true, Witness{std::move(field), std::move(left), std::move(right)}};
}

}  // namespace

ComparisonResult compare(const LieAlgebra& left, const LieAlgebra& right) {
  if (left.dim() != right.dim())
    return distinguished("dim", std::to_string(left.dim()), std::to_string(right.dim()));

  SeriesDims ls = series(left), rs = series(right);
  if (ls.derived != rs.derived)
    return distinguished("series.derived", render_list(ls.derived), render_list(rs.derived));
  if (ls.lower_central != rs.lower_central)
    return distinguished("series.lower_central", render_list(ls.lower_central), render_list(rs.lower_central));
  if (ls.upper_central != rs.upper_central)
    return distinguished("series.upper_central", render_list(ls.upper_central), render_list(rs.upper_central));

  int lt = casimir_count(left), rt = casimir_count(right);
  if (lt != rt) return distinguished("tau", std::to_string(lt), std::to_string(rt));

  auto six_dims = [](const LieAlgebra& algebra) {
    auto der = special_space(algebra, SpecialSpace::Der);
    auto d011 = special_space(algebra, SpecialSpace::D011);
    return std::array<int, 6>{der.dim(),
                              d011.dim(),
                              special_space(algebra, SpecialSpace::Centroid).dim(),
                              intersect(der, d011).dim(),
                              special_space(algebra, SpecialSpace::D11m1).dim(),
                              special_space(algebra, SpecialSpace::Quasicentroid).dim()};
  };
  std::array<int, 6> ld = six_dims(left), rd = six_dims(right);
  for (int k = 0; k < 6; ++k)
    if (ld[k] != rd[k])
      return distinguished("deriv_dims[" + std::to_string(k) + "]", std::to_string(ld[k]),
                           std::to_string(rd[k]));

  InvariantFunction lphi = phi(left), rphi = phi(right);
  if (!functions_equal(lphi, rphi)) return distinguished("phi", to_string(lphi), to_string(rphi));

  InvariantFunction lpsi = psi(left), rpsi = psi(right);
  if (!functions_equal(lpsi, rpsi)) return distinguished("psi", to_string(lpsi), to_string(rpsi));

  return {};
}

}  // namespace liederiv
