#ifndef LIEDERIV_SCALAR_HPP
#define LIEDERIV_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "liederiv/error.hpp"

namespace liederiv {

// Arbitrary-precision exact arithmetic. GMP keeps rationals canonical
// (reduced, positive denominator) through all field operations.
using Integer = mpz_class;
using Rational = mpq_class;

// Canonicalizing constructor for raw numerator/denominator pairs.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero();
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

// Element of Q(i), the working subfield of C. Components stay canonical
// because Rational arithmetic is canonical.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long r) : re(r), im(0) {}                 // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r, long i) : re(r), im(i) {}

  static GaussianRational i() { return GaussianRational(0, 1); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }
  // re^2 + im^2, the field norm down to Q.
  Rational norm() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DivisionByZero();
    Rational n = o.norm();
    Rational r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = std::move(r);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  GaussianRational inverse() const {
    if (is_zero()) throw DivisionByZero();
    Rational n = norm();
    return {re / n, -im / n};
  }
};

// Structural order (re, then im); used for canonical sorting, not analysis.
int cmp(const Rational& a, const Rational& b);
int cmp(const GaussianRational& a, const GaussianRational& b);

inline bool scalar_less(const GaussianRational& a, const GaussianRational& b) { return cmp(a, b) < 0; }

// Rough operand size for pivot selection: total bit length of all parts.
std::size_t bit_size(const Rational& q);
std::size_t bit_size(const GaussianRational& z);

// Exact text syntax: `p/q` rationals (q omitted when 1), `a+bi` / `a-bi`
// Gaussian rationals, whitespace-free, no floating literals.
std::string to_string(const Rational& q);
std::string to_string(const GaussianRational& z);
Rational parse_rational(std::string_view text);
GaussianRational parse_scalar(std::string_view text);

}  // namespace liederiv

#endif
