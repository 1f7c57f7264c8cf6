#ifndef LIEDERIV_SUBSPACE_HPP
#define LIEDERIV_SUBSPACE_HPP

#include <vector>

#include "liederiv/matrix.hpp"

namespace liederiv {

// Linear subspace of Q(i)^n. The basis matrix (columns = basis vectors) is
// kept in reduced echelon form, so equal subspaces compare equal as data.
class Subspace {
 public:
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(ambient_dim, 0) {}
  Subspace(int ambient_dim, const Matrix<GaussianRational>& spanning_columns)
      : ambient_(ambient_dim), basis_(column_space_canonical(spanning_columns)) {
    if (spanning_columns.rows() != ambient_dim) throw DimensionMismatch("subspace basis");
  }

  static Subspace zero(int ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(int ambient_dim) {
    return Subspace(ambient_dim, Matrix<GaussianRational>::identity(ambient_dim));
  }
  static Subspace span_of(const std::vector<std::vector<GaussianRational>>& vectors, int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.cols(); }
  const Matrix<GaussianRational>& basis() const { return basis_; }
  std::vector<GaussianRational> basis_vector(int k) const;

  bool contains(const std::vector<GaussianRational>& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  int ambient_;
  Matrix<GaussianRational> basis_;
};

// Exact rank and canonical nullspace of a Q(i) matrix.
struct RankNullspace {
  int rank;
  Subspace nullspace;
};
RankNullspace rank_nullspace(const Matrix<GaussianRational>& m);

Subspace subspace_intersect(const Subspace& u, const Subspace& v);
Subspace subspace_sum(const Subspace& u, const Subspace& v);

}  // namespace liederiv

#endif
