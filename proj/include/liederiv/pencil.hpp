#ifndef LIEDERIV_PENCIL_HPP
#define LIEDERIV_PENCIL_HPP

#include <variant>
#include <vector>

#include "liederiv/matrix.hpp"
#include "liederiv/subspace.hpp"

namespace liederiv {

// Matrix whose entries are degree <= 1 polynomials in one parameter
// (pencil form M0 + x*M1).
using PolyMatrix = Matrix<Poly>;

// True pencil check; constraint systems built elsewhere must satisfy it.
bool is_pencil(const PolyMatrix& m);

Matrix<GaussianRational> pencil_eval(const PolyMatrix& m, const GaussianRational& point);

struct PencilRankProfile {
  int generic_rank;
  // Monic squarefree polynomial whose roots contain every parameter value
  // with a rank drop (may over-approximate; 1 when no candidates).
  Poly candidates;
};

// Generic rank by random two-point evaluation (resampled until the points
// agree), candidates from the pivot polynomials of one fraction-free
// elimination over Q(i)[x].
PencilRankProfile pencil_profile(const PolyMatrix& m);

// A squarefree monic polynomial standing for its set of roots.
struct RootBundle {
  Poly modulus;
};

struct BundleRank {
  Poly modulus;
  int rank;
};

int rank_at_point(const PolyMatrix& m, const GaussianRational& point);

// Rank over the quotient ring. Q(i) roots of the modulus are split off and
// evaluated directly; zero-divisor hits split the remaining factor (dynamic
// evaluation). A single undivided factor reports a plain rank.
std::variant<int, std::vector<BundleRank>> rank_at_point(const PolyMatrix& m, const RootBundle& bundle);

}  // namespace liederiv

#endif
