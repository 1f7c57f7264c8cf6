#include "liederiv/invariant_function.hpp"

#include <algorithm>

namespace liederiv {

namespace {

bool exceptional_less(const ExceptionalPoint& a, const ExceptionalPoint& b) {
  if (a.is_explicit() != b.is_explicit()) return a.is_explicit();
  if (a.is_explicit()) return scalar_less(a.point(), b.point());
  return cmp(a.modulus(), b.modulus()) < 0;
}

}  // namespace

namespace detail {

InvariantFunction invariant_function_of_pencil(const LieAlgebra& algebra, InvariantKind kind,
                                               const GaussianRational& beta,
                                               const GaussianRational& gamma) {
  int n = algebra.dim();
  int total = n * n;
  PolyMatrix pencil = constraint_pencil(algebra, beta, gamma);
  PencilRankProfile profile = pencil_profile(pencil);

  InvariantFunction f;
  f.kind = kind;
  f.generic_value = total - profile.generic_rank;

  if (profile.candidates.degree() >= 1) {
    RootExtraction roots = gaussian_rational_roots(profile.candidates);
    for (const auto& r : roots.roots) {
      int value = total - rank_at_point(pencil, r);
      if (value != f.generic_value) f.exceptional.push_back({r, value});
    }
    if (roots.cofactor.degree() >= 1) {
      auto outcome = rank_at_point(pencil, RootBundle{roots.cofactor});
      if (auto* rank = std::get_if<int>(&outcome)) {
        int value = total - *rank;
        if (value != f.generic_value) f.exceptional.push_back({roots.cofactor, value});
      } else {
        for (const auto& part : std::get<std::vector<BundleRank>>(outcome)) {
          int value = total - part.rank;
          if (value != f.generic_value) f.exceptional.push_back({part.modulus, value});
        }
      }
    }
  }
  std::sort(f.exceptional.begin(), f.exceptional.end(), exceptional_less);
  return f;
}

}  // namespace detail

InvariantFunction psi(const LieAlgebra& algebra) {
  return detail::invariant_function_of_pencil(algebra, InvariantKind::Psi, 1, 1);
}

InvariantFunction phi(const LieAlgebra& algebra) {
  return detail::invariant_function_of_pencil(algebra, InvariantKind::Phi, 1, 0);
}

int evaluate(const InvariantFunction& f, const GaussianRational& point) {
  for (const auto& e : f.exceptional) {
    if (e.is_explicit()) {
      if (e.point() == point) return e.value;
    } else if (e.modulus().eval(point).is_zero()) {
      return e.value;
    }
  }
  return f.generic_value;
}

bool functions_equal(const InvariantFunction& f, const InvariantFunction& g) {
  if (f.kind != g.kind) throw KindMismatch();
  return f.generic_value == g.generic_value && f.exceptional == g.exceptional;
}

std::string to_string(const InvariantFunction& f) {
  std::string out = "{";
  for (const auto& e : f.exceptional) {
    if (e.is_explicit())
      out += to_string(e.point());
    else
      out += "root-of(" + to_string(e.modulus()) + ")";
    out += " -> " + std::to_string(e.value) + ", ";
  }
  out += "generic " + std::to_string(f.generic_value) + "}";
  return out;
}

}  // namespace liederiv
