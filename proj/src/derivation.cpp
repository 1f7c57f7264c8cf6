#include "liederiv/derivation.hpp"

namespace liederiv {

DerivationParams CanonicalFamily::params() const {
  switch (family) {
    case Family::ZeroZero:
      return {delta, 0, 0};
    case Family::OneMinusOne:
      return {delta, 1, -1};
    case Family::OneZero:
      return {delta, 1, 0};
    case Family::OneOne:
      return {delta, 1, 1};
  }
  throw Error("unreachable");
}

CanonicalFamily canonicalize(const DerivationParams& p) {
  GaussianRational bg = p.beta + p.gamma;
  if (bg.is_zero()) {
    GaussianRational delta = p.alpha.is_zero() ? GaussianRational(0) : GaussianRational(1);
    if (p.beta.is_zero()) return {Family::ZeroZero, delta};
    return {Family::OneMinusOne, delta};
  }
  if (p.beta == p.gamma) return {Family::OneOne, p.alpha / p.beta};
  return {Family::OneZero, p.alpha / bg};
}

std::vector<GaussianRational> vectorize(const Matrix<GaussianRational>& op) {
  std::vector<GaussianRational> v;
  v.reserve(static_cast<std::size_t>(op.rows()) * op.cols());
  for (int r = 0; r < op.rows(); ++r)
    for (int c = 0; c < op.cols(); ++c) v.push_back(op.at(r, c));
  return v;
}

Matrix<GaussianRational> unvectorize(const std::vector<GaussianRational>& v, int n) {
  if (static_cast<int>(v.size()) != n * n) throw DimensionMismatch("unvectorize");
  Matrix<GaussianRational> m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = v[static_cast<std::size_t>(r) * n + c];
  return m;
}

std::vector<Matrix<GaussianRational>> DerivationSpace::basis() const {
  std::vector<Matrix<GaussianRational>> out;
  out.reserve(dim());
  for (int k = 0; k < dim(); ++k) out.push_back(unvectorize(vec_.basis_vector(k), n_));
  return out;
}

bool DerivationSpace::contains(const Matrix<GaussianRational>& op) const {
  return vec_.contains(vectorize(op));
}

namespace {

// Row layout: for each pair i < j a block of n equations indexed by k.
// Column layout matches vectorize: entry (r, c) of A sits at r*n + c.
//
// Equation ((i,j), k):
//   alpha * sum_m c_ij^m A_km - beta * sum_m c_mj^k A_mi - gamma * sum_m c_im^k A_mj = 0
template <typename Scalar, typename AlphaCoeff>
Matrix<Scalar> build_constraints(const LieAlgebra& algebra, const AlphaCoeff& alpha_coeff,
                                 const GaussianRational& beta, const GaussianRational& gamma) {
  int n = algebra.dim();
  Matrix<Scalar> m(n * n * (n - 1) / 2, n * n);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k, ++row) {
        // alpha-part: A_km for m with c_ij^m != 0
        for (int mm = 0; mm < n; ++mm) {
          GaussianRational cijm = algebra.c(i, j, mm);
          if (!cijm.is_zero()) m.at(row, k * n + mm) = m.at(row, k * n + mm) + alpha_coeff(cijm);
          GaussianRational cmjk = algebra.c(mm, j, k);
          if (!cmjk.is_zero() && !beta.is_zero())
            m.at(row, mm * n + i) = m.at(row, mm * n + i) - Scalar(beta * cmjk);
          GaussianRational cimk = algebra.c(i, mm, k);
          if (!cimk.is_zero() && !gamma.is_zero())
            m.at(row, mm * n + j) = m.at(row, mm * n + j) - Scalar(gamma * cimk);
        }
      }
    }
  return m;
}

}  // namespace

Matrix<GaussianRational> constraint_matrix(const LieAlgebra& algebra, const DerivationParams& p) {
  return build_constraints<GaussianRational>(
      algebra, [&p](const GaussianRational& c) { return p.alpha * c; }, p.beta, p.gamma);
}

PolyMatrix constraint_pencil(const LieAlgebra& algebra, const GaussianRational& beta,
                             const GaussianRational& gamma) {
  return build_constraints<Poly>(
      algebra,
      [](const GaussianRational& c) { return Poly(std::vector<GaussianRational>{GaussianRational(), c}); },
      beta, gamma);
}

DerivationSpace derivation_space(const LieAlgebra& algebra, const DerivationParams& p) {
  int n = algebra.dim();
  auto [rank, nullspace] = rank_nullspace(constraint_matrix(algebra, p));
  (void)rank;
  DerivationSpace space(p, n, std::move(nullspace));
  // re-verify the defining relation on every basis pair
  for (const auto& op : space.basis()) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        auto ei = algebra.basis_vector(i), ej = algebra.basis_vector(j);
        auto lhs = algebra.bracket(ei, ej);
        for (auto& x : lhs) x = p.alpha * x;
        auto lhs2 = op.apply(lhs);
        auto r1 = algebra.bracket(op.apply(ei), ej);
        auto r2 = algebra.bracket(ei, op.apply(ej));
        for (int k = 0; k < n; ++k)
          if (lhs2[k] != p.beta * r1[k] + p.gamma * r2[k])
            throw Error("derivation space basis failed re-verification");
      }
  }
  return space;
}

DerivationSpace intersect(const DerivationSpace& a, const DerivationSpace& b) {
  if (a.operator_dim() != b.operator_dim()) throw DimensionMismatch("derivation space intersection");
  return DerivationSpace(std::nullopt, a.operator_dim(),
                         subspace_intersect(a.vectorized(), b.vectorized()));
}

DerivationSpace special_space(const LieAlgebra& algebra, SpecialSpace which) {
  auto space = [&](long a, long b, long g) {
    return derivation_space(algebra, {GaussianRational(a), GaussianRational(b), GaussianRational(g)});
  };
  switch (which) {
    case SpecialSpace::Der:
      return space(1, 1, 1);
    case SpecialSpace::Centroid:
      return space(1, 1, 0);
    case SpecialSpace::Quasicentroid:
      return space(0, 1, -1);
    case SpecialSpace::D011:
      return space(0, 1, 1);
    case SpecialSpace::D11m1:
      return space(1, 1, -1);
    case SpecialSpace::D100:
      return space(1, 0, 0);
    case SpecialSpace::D010:
      return space(0, 1, 0);
    case SpecialSpace::D100capD011:
      return intersect(space(1, 0, 0), space(0, 1, 1));
    case SpecialSpace::D100capD010:
      return intersect(space(1, 0, 0), space(0, 1, 0));
  }
  throw Error("unreachable");
}

bool closure_check(const DerivationSpace& space, ProductLaw law) {
  auto basis = space.basis();
  GaussianRational half(make_rational(1, 2));
  for (const auto& a : basis)
    for (const auto& b : basis) {
      Matrix<GaussianRational> prod(0, 0);
      switch (law) {
        case ProductLaw::Lie:
          prod = a * b - b * a;
          break;
        case ProductLaw::Jordan:
          prod = half * (a * b + b * a);
          break;
        case ProductLaw::Associative:
          prod = a * b;
          break;
      }
      if (!space.contains(prod)) return false;
    }
  return true;
}

}  // namespace liederiv
