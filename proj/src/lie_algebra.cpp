#include "liederiv/lie_algebra.hpp"

#include <algorithm>

namespace liederiv {

LieAlgebra::LieAlgebra(int dim, BracketMap structure, std::string name)
    : dim_(dim), name_(std::move(name)) {
  if (dim < 0) throw Error("negative dimension");
  for (auto& [pair, terms] : structure) {
    auto [i, j] = pair;
    if (i < 0 || j >= dim || i >= j) throw Error("bracket indices out of range");
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.k < b.k; });
    std::vector<Term> merged;
    for (auto& t : terms) {
      if (t.k < 0 || t.k >= dim) throw Error("bracket target index out of range");
      if (!merged.empty() && merged.back().k == t.k)
        merged.back().c += t.c;
      else
        merged.push_back(t);
    }
    std::erase_if(merged, [](const Term& t) { return t.c.is_zero(); });
    if (!merged.empty()) structure_.emplace(pair, std::move(merged));
  }
}

GaussianRational LieAlgebra::c(int i, int j, int k) const {
  if (i == j) return {};
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = structure_.find({i, j});
  if (it == structure_.end()) return {};
  for (const Term& t : it->second)
    if (t.k == k) return flip ? -t.c : t.c;
  return {};
}

std::vector<GaussianRational> LieAlgebra::bracket(const std::vector<GaussianRational>& x,
                                                  const std::vector<GaussianRational>& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw DimensionMismatch("bracket operands");
  std::vector<GaussianRational> out(dim_);
  for (const auto& [pair, terms] : structure_) {
    auto [i, j] = pair;
    GaussianRational coeff = x[i] * y[j] - x[j] * y[i];
    if (coeff.is_zero()) continue;
    for (const Term& t : terms) out[t.k] += coeff * t.c;
  }
  return out;
}

Matrix<GaussianRational> LieAlgebra::ad(const std::vector<GaussianRational>& x) const {
  if (static_cast<int>(x.size()) != dim_) throw DimensionMismatch("ad operand");
  Matrix<GaussianRational> m(dim_, dim_);
  for (const auto& [pair, terms] : structure_) {
    auto [i, j] = pair;
    for (const Term& t : terms) {
      if (!x[i].is_zero()) m.at(t.k, j) += x[i] * t.c;  // [x_i e_i, e_j]
      if (!x[j].is_zero()) m.at(t.k, i) -= x[j] * t.c;  // [x_j e_j, e_i]
    }
  }
  return m;
}

std::vector<GaussianRational> LieAlgebra::basis_vector(int i) const {
  std::vector<GaussianRational> v(dim_);
  v[i] = 1;
  return v;
}

LieAlgebraBuilder& LieAlgebraBuilder::bracket(int i, int j,
                                              std::vector<std::pair<int, GaussianRational>> terms) {
  std::vector<LieAlgebra::Term> ts;
  ts.reserve(terms.size());
  for (auto& [k, c] : terms) ts.push_back({k - 1, std::move(c)});
  if (!structure_.emplace(std::make_pair(i - 1, j - 1), std::move(ts)).second)
    throw Error("duplicate bracket pair");
  return *this;
}

std::optional<JacobiViolation> validate(const LieAlgebra& algebra) {
  int n = algebra.dim();
  for (int i = 0; i < n; ++i) {
    auto ei = algebra.basis_vector(i);
    for (int j = i + 1; j < n; ++j) {
      auto ej = algebra.basis_vector(j);
      for (int k = j + 1; k < n; ++k) {
        auto ek = algebra.basis_vector(k);
        auto s1 = algebra.bracket(algebra.bracket(ei, ej), ek);
        auto s2 = algebra.bracket(algebra.bracket(ej, ek), ei);
        auto s3 = algebra.bracket(algebra.bracket(ek, ei), ej);
        for (int l = 0; l < n; ++l) {
          GaussianRational residual = s1[l] + s2[l] + s3[l];
          if (!residual.is_zero()) return JacobiViolation{i + 1, j + 1, k + 1, l + 1, residual};
        }
      }
    }
  }
  return std::nullopt;
}

LieAlgebra change_basis(const LieAlgebra& algebra, const Matrix<GaussianRational>& p) {
  int n = algebra.dim();
  if (p.rows() != n || p.cols() != n) throw DimensionMismatch("basis-change matrix");
  Matrix<GaussianRational> p_inv = inverse(p);  // throws SingularMatrix
  std::vector<std::vector<GaussianRational>> new_basis(n);
  for (int j = 0; j < n; ++j) {
    new_basis[j].resize(n);
    for (int i = 0; i < n; ++i) new_basis[j][i] = p.at(i, j);
  }
  LieAlgebra::BracketMap structure;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      auto w = p_inv.apply(algebra.bracket(new_basis[a], new_basis[b]));
      std::vector<LieAlgebra::Term> terms;
      for (int k = 0; k < n; ++k)
        if (!w[k].is_zero()) terms.push_back({k, w[k]});
      if (!terms.empty()) structure.emplace(std::make_pair(a, b), std::move(terms));
    }
  return LieAlgebra(n, std::move(structure), algebra.name());
}

QuotientAlgebra quotient(const LieAlgebra& algebra, const Subspace& ideal) {
  int n = algebra.dim();
  if (ideal.ambient_dim() != n) throw AmbientMismatch();
  for (int t = 0; t < ideal.dim(); ++t) {
    auto v = ideal.basis_vector(t);
    for (int i = 0; i < n; ++i)
      if (!ideal.contains(algebra.bracket(algebra.basis_vector(i), v))) throw NotAnIdeal();
  }

  // leading rows of the canonical basis columns are the pivot coordinates
  std::vector<int> pivot_rows;
  for (int t = 0; t < ideal.dim(); ++t) {
    int r = 0;
    while (r < n && ideal.basis().at(r, t).is_zero()) ++r;
    pivot_rows.push_back(r);
  }
  std::vector<int> complement;
  for (int r = 0; r < n; ++r)
    if (std::find(pivot_rows.begin(), pivot_rows.end(), r) == pivot_rows.end()) complement.push_back(r);

  int m = static_cast<int>(complement.size());
  Matrix<GaussianRational> projection(m, n);
  for (int a = 0; a < m; ++a) {
    projection.at(a, complement[a]) = 1;
    for (int t = 0; t < ideal.dim(); ++t)
      projection.at(a, pivot_rows[t]) = -ideal.basis().at(complement[a], t);
  }
  Matrix<GaussianRational> section(n, m);
  for (int a = 0; a < m; ++a) section.at(complement[a], a) = 1;

  LieAlgebra::BracketMap structure;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      auto w = projection.apply(
          algebra.bracket(algebra.basis_vector(complement[a]), algebra.basis_vector(complement[b])));
      std::vector<LieAlgebra::Term> terms;
      for (int k = 0; k < m; ++k)
        if (!w[k].is_zero()) terms.push_back({k, w[k]});
      if (!terms.empty()) structure.emplace(std::make_pair(a, b), std::move(terms));
    }
  std::string name = algebra.name().empty() ? std::string() : algebra.name() + "/ideal";
  return {LieAlgebra(m, std::move(structure), std::move(name)), std::move(projection), std::move(section)};
}

}  // namespace liederiv
