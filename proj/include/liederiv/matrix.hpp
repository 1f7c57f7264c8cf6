#ifndef LIEDERIV_MATRIX_HPP
#define LIEDERIV_MATRIX_HPP

#include <concepts>
#include <utility>
#include <vector>

#include "liederiv/quotient.hpp"
#include "liederiv/scalar.hpp"

namespace liederiv {

// Scalar adapters used by the generic elimination. QuotientElement carries
// a modulus, so zero/one must be derived from an existing entry.
inline bool is_zero(const GaussianRational& x) { return x.is_zero(); }
inline GaussianRational zero_like(const GaussianRational&) { return {}; }
inline GaussianRational one_like(const GaussianRational&) { return {1}; }
inline std::size_t pivot_size(const GaussianRational& x) { return bit_size(x); }

inline bool is_zero(const QuotientElement& x) { return x.is_zero(); }
inline QuotientElement zero_like(const QuotientElement& x) { return x.with_residue({}); }
inline QuotientElement one_like(const QuotientElement& x) { return x.with_residue(Poly(1)); }
inline std::size_t pivot_size(const QuotientElement& x) { return bit_size(x.residue()); }

inline bool is_zero(const Poly& x) { return x.is_zero(); }
inline Poly zero_like(const Poly&) { return {}; }
inline Poly one_like(const Poly&) { return Poly(1); }
inline std::size_t pivot_size(const Poly& x) {
  return (static_cast<std::size_t>(x.degree() + 1) << 24) + bit_size(x);  // degree dominates
}

// Dense row-major matrix over an exact scalar.
template <typename S>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, const S& fill) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, fill) {}
  Matrix(int rows, int cols)
    requires std::default_initializable<S>
      : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

  static Matrix identity(int n)
    requires std::default_initializable<S>
  {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = one_like(S{});
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  S& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
  const S& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
  }

  Matrix transpose() const {
    if (e_.empty()) {
      Matrix t;
      t.rows_ = cols_;
      t.cols_ = rows_;
      return t;
    }
    Matrix t(cols_, rows_, e_[0]);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (is_zero(a.at(i, k))) continue;
        for (int j = 0; j < b.cols_; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum");
    Matrix out = a;
    for (std::size_t k = 0; k < out.e_.size(); ++k) out.e_[k] = out.e_[k] + b.e_[k];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference");
    Matrix out = a;
    for (std::size_t k = 0; k < out.e_.size(); ++k) out.e_[k] = out.e_[k] - b.e_[k];
    return out;
  }

  friend Matrix operator*(const S& s, const Matrix& m) {
    Matrix out = m;
    for (auto& e : out.e_) e = s * e;
    return out;
  }

  std::vector<S> apply(const std::vector<S>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("matrix-vector product");
    std::vector<S> out(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!is_zero(at(i, j))) out[i] += at(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  int rows_, cols_;
  std::vector<S> e_;

  template <typename T>
  friend class Matrix;
};

template <typename S>
struct Echelon {
  Matrix<S> mat;               // reduced row echelon form
  std::vector<int> pivot_cols; // ascending
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

// Gauss-Jordan with pivot selection by minimal operand size. Division by a
// quotient-ring zero divisor propagates SplitRequired to the caller.
template <typename S>
Echelon<S> reduced_row_echelon(Matrix<S> m) {
  Echelon<S> out;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int best = -1;
    std::size_t best_size = 0;
    for (int i = r; i < m.rows(); ++i) {
      if (is_zero(m.at(i, c))) continue;
      std::size_t sz = pivot_size(m.at(i, c));
      if (best < 0 || sz < best_size) {
        best = i;
        best_size = sz;
      }
    }
    if (best < 0) continue;
    m.swap_rows(r, best);
    S inv = one_like(m.at(r, c)) / m.at(r, c);
    for (int j = c; j < m.cols(); ++j) m.at(r, j) = inv * m.at(r, j);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m.at(i, c))) continue;
      S factor = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - factor * m.at(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.mat = std::move(m);
  return out;
}

template <typename S>
int rank_of(const Matrix<S>& m) {
  return reduced_row_echelon(m).rank();
}

// Canonical basis of the column space: vectors as rows, reduced, returned as
// columns. Equal spaces produce identical matrices.
template <typename S>
Matrix<S> column_space_canonical(const Matrix<S>& columns) {
  Echelon<S> ech = reduced_row_echelon(columns.transpose());
  Matrix<S> out(columns.rows(), ech.rank());
  for (int k = 0; k < ech.rank(); ++k)
    for (int r = 0; r < columns.rows(); ++r) out.at(r, k) = ech.mat.at(k, r);
  return out;
}

// Exact rank plus canonical nullspace basis (as columns).
template <typename S>
std::pair<int, Matrix<S>> rank_and_nullspace(const Matrix<S>& m)
  requires std::default_initializable<S>
{
  Echelon<S> ech = reduced_row_echelon(m);
  std::vector<int> free_cols;
  {
    std::size_t p = 0;
    for (int c = 0; c < m.cols(); ++c) {
      if (p < ech.pivot_cols.size() && ech.pivot_cols[p] == c)
        ++p;
      else
        free_cols.push_back(c);
    }
  }
  Matrix<S> null(m.cols(), static_cast<int>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    int f = free_cols[k];
    null.at(f, static_cast<int>(k)) = one_like(S{});
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r)
      null.at(ech.pivot_cols[r], static_cast<int>(k)) = zero_like(S{}) - ech.mat.at(static_cast<int>(r), f);
  }
  return {ech.rank(), column_space_canonical(null)};
}

Matrix<GaussianRational> inverse(const Matrix<GaussianRational>& m);

}  // namespace liederiv

#endif
