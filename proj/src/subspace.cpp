#include "liederiv/subspace.hpp"

namespace liederiv {

Matrix<GaussianRational> inverse(const Matrix<GaussianRational>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  int n = m.rows();
  Matrix<GaussianRational> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  Echelon<GaussianRational> ech = reduced_row_echelon(std::move(aug));
  if (ech.rank() != n) throw SingularMatrix();
  Matrix<GaussianRational> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = ech.mat.at(i, n + j);
  return inv;
}

Subspace Subspace::span_of(const std::vector<std::vector<GaussianRational>>& vectors, int ambient_dim) {
  Matrix<GaussianRational> cols(ambient_dim, static_cast<int>(vectors.size()));
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (static_cast<int>(vectors[k].size()) != ambient_dim) throw DimensionMismatch("span vector length");
    for (int r = 0; r < ambient_dim; ++r) cols.at(r, static_cast<int>(k)) = vectors[k][r];
  }
  return Subspace(ambient_dim, cols);
}

std::vector<GaussianRational> Subspace::basis_vector(int k) const {
  std::vector<GaussianRational> v(ambient_);
  for (int r = 0; r < ambient_; ++r) v[r] = basis_.at(r, k);
  return v;
}

bool Subspace::contains(const std::vector<GaussianRational>& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw AmbientMismatch();
  Matrix<GaussianRational> aug(ambient_, dim() + 1);
  for (int r = 0; r < ambient_; ++r) {
    for (int c = 0; c < dim(); ++c) aug.at(r, c) = basis_.at(r, c);
    aug.at(r, dim()) = v[r];
  }
  return rank_of(aug) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw AmbientMismatch();
  for (int k = 0; k < other.dim(); ++k)
    if (!contains(other.basis_vector(k))) return false;
  return true;
}

RankNullspace rank_nullspace(const Matrix<GaussianRational>& m) {
  auto [rank, null] = rank_and_nullspace(m);
  Subspace space(m.cols());
  if (null.cols() > 0) space = Subspace(m.cols(), null);
  return {rank, space};
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw AmbientMismatch();
  int n = u.ambient_dim();
  if (u.dim() == 0 || v.dim() == 0) return Subspace::zero(n);
  // nullspace of [B_u | -B_v]: matched coefficient pairs produce vectors in both spans
  Matrix<GaussianRational> stacked(n, u.dim() + v.dim());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < u.dim(); ++c) stacked.at(r, c) = u.basis().at(r, c);
    for (int c = 0; c < v.dim(); ++c) stacked.at(r, u.dim() + c) = -v.basis().at(r, c);
  }
  auto [rank, null] = rank_and_nullspace(stacked);
  (void)rank;
  Matrix<GaussianRational> vectors(n, null.cols());
  for (int k = 0; k < null.cols(); ++k)
    for (int r = 0; r < n; ++r) {
      GaussianRational acc;
      for (int c = 0; c < u.dim(); ++c) acc += u.basis().at(r, c) * null.at(c, k);
      vectors.at(r, k) = acc;
    }
  return Subspace(n, vectors);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw AmbientMismatch();
  int n = u.ambient_dim();
  Matrix<GaussianRational> cols(n, u.dim() + v.dim());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < u.dim(); ++c) cols.at(r, c) = u.basis().at(r, c);
    for (int c = 0; c < v.dim(); ++c) cols.at(r, u.dim() + c) = v.basis().at(r, c);
  }
  return Subspace(n, cols);
}

}  // namespace liederiv
