#ifndef LIEDERIV_POLY_HPP
#define LIEDERIV_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "liederiv/scalar.hpp"

namespace liederiv {

// Univariate polynomial over Q(i), coefficients stored lowest degree first.
// Invariant: no trailing zero coefficient; the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  Poly(GaussianRational constant) {  // NOLINT(google-explicit-constructor)
    if (!constant.is_zero()) c_.push_back(std::move(constant));
  }
  Poly(long constant) : Poly(GaussianRational(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly variable() { return Poly(std::vector<GaussianRational>{0, 1}); }
  // x - root
  static Poly linear_from_root(const GaussianRational& root) {
    return Poly(std::vector<GaussianRational>{-root, 1});
  }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  GaussianRational coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : GaussianRational();
  }
  const std::vector<GaussianRational>& coeffs() const { return c_; }
  const GaussianRational& leading() const { return c_.back(); }
  GaussianRational constant_term() const { return coeff(0); }

  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const GaussianRational& s, const Poly& p);

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly monic() const;
  Poly derivative() const;
  GaussianRational eval(const GaussianRational& x) const;

  // Field division with remainder; g must be nonzero.
  static std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g);
  // Division known to be exact; throws Error if a remainder survives.
  static Poly exact_div(const Poly& f, const Poly& g);

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<GaussianRational> c_;
};

// Monic gcd; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
Poly poly_gcd(Poly f, Poly g);

// Monic f / gcd(f, f'): same roots, all simple. f must be nonzero.
Poly squarefree_part(const Poly& f);

struct RootExtraction {
  std::vector<GaussianRational> roots;  // sorted by (re, im)
  Poly cofactor;                        // monic, no roots in Q(i)
};

// All Q(i) roots of a nonzero squarefree polynomial, by Gaussian-integer
// divisor enumeration on the cleared-denominator form. Aborts with a
// diagnostic if a coefficient norm exceeds the search cap (1e6).
RootExtraction gaussian_rational_roots(const Poly& f);

// Structural order: degree first, then coefficients from the constant up.
int cmp(const Poly& a, const Poly& b);

std::size_t bit_size(const Poly& p);

std::string to_string(const Poly& p, const std::string& var = "x");

}  // namespace liederiv

#endif
