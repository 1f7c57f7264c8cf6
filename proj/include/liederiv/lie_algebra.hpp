#ifndef LIEDERIV_LIE_ALGEBRA_HPP
#define LIEDERIV_LIE_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liederiv/subspace.hpp"

namespace liederiv {

// Finite-dimensional Lie algebra given by structure constants over Q(i).
// Only pairs i < j are stored (antisymmetry supplies the rest); zero
// coefficients are dropped. Indices are 0-based internally, 1-based in all
// text interfaces.
class LieAlgebra {
 public:
  struct Term {
    int k;
    GaussianRational c;
    friend bool operator==(const Term&, const Term&) = default;
  };
  using BracketMap = std::map<std::pair<int, int>, std::vector<Term>>;

  LieAlgebra(int dim, BracketMap structure, std::string name = {});

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const BracketMap& structure() const { return structure_; }

  // c_ij^k with antisymmetry in (i, j).
  GaussianRational c(int i, int j, int k) const;

  std::vector<GaussianRational> bracket(const std::vector<GaussianRational>& x,
                                        const std::vector<GaussianRational>& y) const;

  // Matrix of ad(x): y -> [x, y], columns are images of basis vectors.
  Matrix<GaussianRational> ad(const std::vector<GaussianRational>& x) const;

  std::vector<GaussianRational> basis_vector(int i) const;

 private:
  int dim_;
  BracketMap structure_;
  std::string name_;
};

// Convenience construction in the 1-based index convention of the catalog.
class LieAlgebraBuilder {
 public:
  explicit LieAlgebraBuilder(int dim, std::string name = {}) : dim_(dim), name_(std::move(name)) {}
  // [e_i, e_j] = sum of c * e_k; i < j, all 1-based.
  LieAlgebraBuilder& bracket(int i, int j, std::vector<std::pair<int, GaussianRational>> terms);
  LieAlgebra build() const { return LieAlgebra(dim_, structure_, name_); }

 private:
  int dim_;
  std::string name_;
  LieAlgebra::BracketMap structure_;
};

struct JacobiViolation {
  int i, j, k, l;  // 1-based, for reporting
  GaussianRational residual;
};

// Ok (nullopt) iff the Jacobi identity holds at every index quadruple.
std::optional<JacobiViolation> validate(const LieAlgebra& algebra);

// Structure constants after the basis change f_j = sum_i P_ij e_i.
LieAlgebra change_basis(const LieAlgebra& algebra, const Matrix<GaussianRational>& p);

struct QuotientAlgebra {
  LieAlgebra algebra;
  // maps old coordinates to quotient coordinates
  Matrix<GaussianRational> projection;
  // embeds quotient coordinates back (a section of the projection)
  Matrix<GaussianRational> section;
};

// Quotient by an ideal; throws NotAnIdeal if [L, I] is not contained in I.
QuotientAlgebra quotient(const LieAlgebra& algebra, const Subspace& ideal);

}  // namespace liederiv

#endif
