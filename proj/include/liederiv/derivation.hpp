#ifndef LIEDERIV_DERIVATION_HPP
#define LIEDERIV_DERIVATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "liederiv/lie_algebra.hpp"
#include "liederiv/pencil.hpp"

namespace liederiv {

// Parameters of the defining relation a*A[x,y] = b*[Ax,y] + g*[x,Ay].
struct DerivationParams {
  GaussianRational alpha, beta, gamma;
  friend bool operator==(const DerivationParams&, const DerivationParams&) = default;
};

// The four-family reduction: every parameter triple yields the same space as
// one of (d,0,0), (d,1,-1), (d,1,0), (d,1,1).
enum class Family { ZeroZero, OneMinusOne, OneZero, OneOne };

struct CanonicalFamily {
  Family family;
  GaussianRational delta;
  DerivationParams params() const;
  friend bool operator==(const CanonicalFamily&, const CanonicalFamily&) = default;
};

CanonicalFamily canonicalize(const DerivationParams& p);

// Solution space of the defining relation, held as a canonical subspace of
// vectorized operators (row-major, ambient n^2).
class DerivationSpace {
 public:
  DerivationSpace(std::optional<DerivationParams> params, int n, Subspace vectorized)
      : params_(std::move(params)), n_(n), vec_(std::move(vectorized)) {}

  int dim() const { return vec_.dim(); }
  int operator_dim() const { return n_; }
  const std::optional<DerivationParams>& params() const { return params_; }
  const Subspace& vectorized() const { return vec_; }
  std::vector<Matrix<GaussianRational>> basis() const;
  bool contains(const Matrix<GaussianRational>& op) const;

  friend bool operator==(const DerivationSpace& a, const DerivationSpace& b) {
    return a.n_ == b.n_ && a.vec_ == b.vec_;
  }

 private:
  std::optional<DerivationParams> params_;
  int n_;
  Subspace vec_;
};

// vec(A) with row-major order; inverse of unvec.
std::vector<GaussianRational> vectorize(const Matrix<GaussianRational>& op);
Matrix<GaussianRational> unvectorize(const std::vector<GaussianRational>& v, int n);

// Linear system whose nullspace is the set of vectorized solutions: one row
// per (i < j, k), n^2 columns.
Matrix<GaussianRational> constraint_matrix(const LieAlgebra& algebra, const DerivationParams& p);

// Same system with symbolic alpha (beta, gamma fixed): a matrix pencil.
PolyMatrix constraint_pencil(const LieAlgebra& algebra, const GaussianRational& beta,
                             const GaussianRational& gamma);

DerivationSpace derivation_space(const LieAlgebra& algebra, const DerivationParams& p);

enum class SpecialSpace {
  Der,            // (1,1,1)
  Centroid,       // (1,1,0)
  Quasicentroid,  // (0,1,-1)
  D011,
  D11m1,
  D100,
  D010,
  D100capD011,
  D100capD010,
};

DerivationSpace special_space(const LieAlgebra& algebra, SpecialSpace which);

DerivationSpace intersect(const DerivationSpace& a, const DerivationSpace& b);

enum class ProductLaw { Lie, Jordan, Associative };

// True iff the span is closed under the product law.
bool closure_check(const DerivationSpace& space, ProductLaw law);

}  // namespace liederiv

#endif
