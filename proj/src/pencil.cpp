#include "liederiv/pencil.hpp"

#include <algorithm>

#include "liederiv/rng.hpp"

namespace liederiv {

bool is_pencil(const PolyMatrix& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m.at(r, c).degree() > 1) return false;
  return true;
}

Matrix<GaussianRational> pencil_eval(const PolyMatrix& m, const GaussianRational& point) {
  Matrix<GaussianRational> out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero()) out.at(r, c) = m.at(r, c).eval(point);
  return out;
}

namespace {

// Fraction-free (Bareiss) elimination over Q(i)[x]; returns the pivot
// polynomials. Row scaling by constants only shifts pivots by units, which
// leaves their root sets intact.
std::vector<Poly> bareiss_pivots(const PolyMatrix& m) {
  std::vector<std::vector<Poly>> rows;
  rows.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    std::vector<Poly> row(m.cols());
    bool nonzero = false;
    Integer den = 1;
    for (int c = 0; c < m.cols(); ++c) {
      row[c] = m.at(r, c);
      for (const auto& coeff : row[c].coeffs()) {
        den = lcm(den, coeff.re.get_den());
        den = lcm(den, coeff.im.get_den());
      }
      nonzero = nonzero || !row[c].is_zero();
    }
    if (!nonzero) continue;
    if (den != 1) {
      GaussianRational scale{make_rational(den, 1)};
      for (auto& p : row) p = scale * p;
    }
    rows.push_back(std::move(row));
  }

  std::vector<Poly> pivots;
  Poly prev(1);
  std::size_t r = 0;
  for (int c = 0; c < m.cols() && r < rows.size(); ++c) {
    std::size_t best = rows.size();
    std::size_t best_size = 0;
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      std::size_t sz = pivot_size(rows[i][c]);
      if (best == rows.size() || sz < best_size) {
        best = i;
        best_size = sz;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[r], rows[best]);
    const Poly pivot = rows[r][c];
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      bool live = false;
      for (int j = c + 1; j < m.cols(); ++j) {
        Poly num = pivot * rows[i][j] - rows[i][c] * rows[r][j];
        rows[i][j] = prev.is_constant() && prev.coeffs().size() == 1 && prev.coeff(0).is_one()
                         ? std::move(num)
                         : Poly::exact_div(num, prev);
        live = live || !rows[i][j].is_zero();
      }
      rows[i][c] = Poly();
      if (!live) rows[i].clear();  // row fully eliminated
    }
    // compact dead rows
    std::size_t w = r + 1;
    for (std::size_t i = r + 1; i < rows.size(); ++i)
      if (!rows[i].empty()) std::swap(rows[w++], rows[i]);
    rows.resize(w);
    pivots.push_back(pivot);
    prev = pivot;
    ++r;
  }
  return pivots;
}

}  // namespace

PencilRankProfile pencil_profile(const PolyMatrix& m) {
  std::vector<Poly> pivots = bareiss_pivots(m);
  int symbolic_rank = static_cast<int>(pivots.size());

  // random two-point confirmation of the generic rank
  int generic = -1;
  for (int attempt = 0; attempt < 64; ++attempt) {
    int r1 = rank_of(pencil_eval(m, random_gaussian_integer()));
    int r2 = rank_of(pencil_eval(m, random_gaussian_integer()));
    if (r1 == r2 && r1 == symbolic_rank) {
      generic = r1;
      break;
    }
  }
  if (generic < 0) throw Error("generic rank sampling failed to stabilize");

  // radical of the pivot product, accumulated factor by factor
  Poly candidates(1);
  for (const Poly& p : pivots) {
    if (p.is_constant()) continue;
    Poly s = squarefree_part(p);
    Poly fresh = Poly::exact_div(s, poly_gcd(candidates, s));
    if (!fresh.is_constant()) candidates = (candidates * fresh).monic();
  }
  return {generic, candidates};
}

int rank_at_point(const PolyMatrix& m, const GaussianRational& point) {
  return rank_of(pencil_eval(m, point));
}

namespace {

void quotient_rank_rec(const PolyMatrix& m, const Poly& modulus, std::vector<BundleRank>& out) {
  QuotientRing ring(modulus);
  Matrix<QuotientElement> q(m.rows(), m.cols(), ring.zero());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero()) q.at(r, c) = ring.element(m.at(r, c));
  try {
    out.push_back({modulus, rank_of(q)});
  } catch (const SplitRequired& split) {
    quotient_rank_rec(m, split.f1, out);
    quotient_rank_rec(m, split.f2, out);
  }
}

}  // namespace

std::variant<int, std::vector<BundleRank>> rank_at_point(const PolyMatrix& m, const RootBundle& bundle) {
  const Poly& modulus = bundle.modulus;
  if (modulus.degree() < 1) throw InvalidModulus("degree must be at least 1");
  if (!modulus.is_monic()) throw InvalidModulus("must be monic");
  if (poly_gcd(modulus, modulus.derivative()).degree() != 0)
    throw InvalidModulus("must be squarefree");

  RootExtraction split = gaussian_rational_roots(modulus);
  std::vector<BundleRank> parts;
  for (const auto& root : split.roots)
    parts.push_back({Poly::linear_from_root(root), rank_at_point(m, root)});
  if (split.cofactor.degree() >= 1) quotient_rank_rec(m, split.cofactor, parts);

  if (parts.size() == 1 && parts.front().modulus == modulus.monic()) return parts.front().rank;
  std::sort(parts.begin(), parts.end(),
            [](const BundleRank& a, const BundleRank& b) { return cmp(a.modulus, b.modulus) < 0; });
  return parts;
}

}  // namespace liederiv
