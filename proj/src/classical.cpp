#include "liederiv/classical.hpp"

#include "liederiv/rng.hpp"

namespace liederiv {

Subspace subalgebra_bracket_span(const LieAlgebra& algebra, const Subspace& u, const Subspace& v) {
  int n = algebra.dim();
  if (u.ambient_dim() != n || v.ambient_dim() != n) throw AmbientMismatch();
  std::vector<std::vector<GaussianRational>> products;
  for (int a = 0; a < u.dim(); ++a)
    for (int b = 0; b < v.dim(); ++b)
      products.push_back(algebra.bracket(u.basis_vector(a), v.basis_vector(b)));
  return Subspace::span_of(products, n);
}

Subspace center(const LieAlgebra& algebra) {
  int n = algebra.dim();
  // x is central iff ad(e_j) x = 0 for all j; stack the blocks
  Matrix<GaussianRational> stacked(n * n, n);
  for (int j = 0; j < n; ++j) {
    auto adj = algebra.ad(algebra.basis_vector(j));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) stacked.at(j * n + r, c) = -adj.at(r, c);  // [x, e_j] = -ad(e_j) x
  }
  return rank_nullspace(stacked).nullspace;
}

SeriesDims series(const LieAlgebra& algebra) {
  int n = algebra.dim();
  SeriesDims out;

  Subspace full = Subspace::full(n);
  out.derived.push_back(n);
  for (Subspace d = full;;) {
    Subspace next = subalgebra_bracket_span(algebra, d, d);
    if (next.dim() == d.dim()) break;
    out.derived.push_back(next.dim());
    if (next.dim() == 0) break;
    d = next;
  }

  out.lower_central.push_back(n);
  for (Subspace l = full;;) {
    Subspace next = subalgebra_bracket_span(algebra, l, full);
    if (next.dim() == l.dim()) break;
    out.lower_central.push_back(next.dim());
    if (next.dim() == 0) break;
    l = next;
  }

  // ascending series via centers of successive quotients
  Subspace c = center(algebra);
  out.upper_central.push_back(c.dim());
  while (c.dim() > 0 && c.dim() < n) {
    QuotientAlgebra q = quotient(algebra, c);
    Subspace qc = center(q.algebra);
    if (qc.dim() == 0) break;
    // preimage: span of the ideal and lifted quotient-center vectors
    std::vector<std::vector<GaussianRational>> vectors;
    for (int t = 0; t < c.dim(); ++t) vectors.push_back(c.basis_vector(t));
    for (int t = 0; t < qc.dim(); ++t) vectors.push_back(q.section.apply(qc.basis_vector(t)));
    Subspace next = Subspace::span_of(vectors, n);
    out.upper_central.push_back(next.dim());
    c = next;
  }
  return out;
}

int casimir_count(const LieAlgebra& algebra) {
  int n = algebra.dim();
  auto rank_at = [&](const std::vector<GaussianRational>& x) {
    Matrix<GaussianRational> m(n, n);
    for (const auto& [pair, terms] : algebra.structure()) {
      auto [i, j] = pair;
      GaussianRational entry;
      for (const auto& t : terms) entry += t.c * x[t.k];
      m.at(i, j) = entry;
      m.at(j, i) = -entry;
    }
    return rank_of(m);
  };
  auto random_point = [&]() {
    std::vector<GaussianRational> x(n);
    for (auto& v : x) v = random_gaussian_integer();
    return x;
  };
  for (int attempt = 0; attempt < 64; ++attempt) {
    int r1 = rank_at(random_point());
    int r2 = rank_at(random_point());
    if (r1 == r2) return n - r1;
  }
  throw Error("generic rank sampling failed to stabilize");
}

InvariantRecord invariant_record(const LieAlgebra& algebra) {
  auto d111 = special_space(algebra, SpecialSpace::Der);
  auto d011 = special_space(algebra, SpecialSpace::D011);
  auto d110 = special_space(algebra, SpecialSpace::Centroid);
  auto d11m1 = special_space(algebra, SpecialSpace::D11m1);
  auto d01m1 = special_space(algebra, SpecialSpace::Quasicentroid);
  auto cap = intersect(d111, d011);
  return InvariantRecord{
      algebra.dim(),
      series(algebra),
      casimir_count(algebra),
      {d111.dim(), d011.dim(), d110.dim(), cap.dim(), d11m1.dim(), d01m1.dim()},
      psi(algebra),
      phi(algebra),
  };
}

namespace {

std::string render_dims(const std::vector<int>& dims) {
  bool digits = true;
  for (int d : dims) digits = digits && d <= 9;
  std::string out = "(";
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (k && !digits) out += ",";
    out += std::to_string(dims[k]);
  }
  return out + ")";
}

}  // namespace

std::string render_record_summary(const InvariantRecord& record) {
  std::string out = render_dims(record.series.derived) + render_dims(record.series.lower_central) +
                    render_dims(record.series.upper_central) + " " + std::to_string(record.tau) + " [";
  for (std::size_t k = 0; k < record.deriv_dims.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(record.deriv_dims[k]);
  }
  return out + "]";
}

}  // namespace liederiv
