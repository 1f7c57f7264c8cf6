#include "liederiv/poly.hpp"

#include <algorithm>
#include <set>

namespace liederiv {

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> prod(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Poly(std::move(prod));
}

Poly operator*(const GaussianRational& s, const Poly& p) {
  if (s.is_zero()) return {};
  std::vector<GaussianRational> out = p.c_;
  for (auto& c : out) c = s * c;
  return Poly(std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  return leading().inverse() * *this;
}

Poly Poly::derivative() const {
  if (is_constant()) return {};
  std::vector<GaussianRational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = GaussianRational(make_rational(static_cast<long>(k))) * c_[k];
  return Poly(std::move(d));
}

GaussianRational Poly::eval(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DivisionByZero();
  if (f.degree() < g.degree()) return {Poly(), f};
  std::vector<GaussianRational> rem = f.c_;
  std::vector<GaussianRational> quot(f.degree() - g.degree() + 1);
  GaussianRational lead_inv = g.leading().inverse();
  for (int k = f.degree(); k >= g.degree(); --k) {
    if (rem[k].is_zero()) continue;
    GaussianRational q = rem[k] * lead_inv;
    quot[k - g.degree()] = q;
    for (int j = 0; j <= g.degree(); ++j) rem[k - g.degree() + j] -= q * g.c_[j];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::exact_div(const Poly& f, const Poly& g) {
  auto [q, r] = divrem(f, g);
  if (!r.is_zero()) throw Error("polynomial division expected to be exact");
  return q;
}

Poly poly_gcd(Poly f, Poly g) {
  while (!g.is_zero()) {
    Poly r = Poly::divrem(f, g).second;
    f = std::move(g);
    g = r.monic();  // normalize to tame coefficient growth
  }
  return f.monic();
}

Poly squarefree_part(const Poly& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  if (f.is_constant()) return Poly(1);
  return Poly::exact_div(f, poly_gcd(f, f.derivative())).monic();
}

namespace {

// Gaussian integers, used only inside the root search.
struct GaussInt {
  Integer re, im;
  bool is_zero() const { return re == 0 && im == 0; }
  Integer norm() const { return re * re + im * im; }
  GaussInt conj() const { return {re, -im}; }
  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator<(const GaussInt& a, const GaussInt& b) {
    return a.re != b.re ? a.re < b.re : a.im < b.im;
  }
};

Integer round_div(const Integer& num, const Integer& den) {
  // nearest integer to num/den, den > 0
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * r >= den) q += 1;
  return q;
}

GaussInt gauss_rem(const GaussInt& a, const GaussInt& b) {
  Integer n = b.norm();
  GaussInt p = a * b.conj();
  GaussInt q{round_div(p.re, n), round_div(p.im, n)};
  return a - q * b;
}

GaussInt gauss_gcd(GaussInt a, GaussInt b) {
  while (!b.is_zero()) {
    GaussInt r = gauss_rem(a, b);
    a = b;
    b = r;
  }
  return a;
}

bool gauss_divides(const GaussInt& d, const GaussInt& a) {
  Integer n = d.norm();
  GaussInt p = a * d.conj();
  return p.re % n == 0 && p.im % n == 0;
}

// All divisors of z up to associates (canonical representative per class).
std::vector<GaussInt> gauss_divisors(const GaussInt& z) {
  Integer n = z.norm();
  std::vector<Integer> norm_divs;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      norm_divs.push_back(d);
      if (d * d != n) norm_divs.push_back(n / d);
    }
  }
  std::set<GaussInt> out;
  for (const Integer& d : norm_divs) {
    // representations x^2 + y^2 = d
    for (Integer x = 0; x * x <= d; ++x) {
      Integer y2 = d - x * x;
      Integer y = sqrt(y2);
      if (y * y != y2) continue;
      for (const GaussInt& cand : {GaussInt{x, y}, GaussInt{y, x}, GaussInt{x, -y}, GaussInt{y, -x}}) {
        if (cand.is_zero()) continue;
        // canonical associate: re > 0, im >= 0
        GaussInt c = cand;
        while (!(c.re > 0 && c.im >= 0)) c = GaussInt{-c.im, c.re};
        if (out.count(c)) continue;
        if (gauss_divides(c, z)) out.insert(c);
      }
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

RootExtraction gaussian_rational_roots(const Poly& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  RootExtraction result;
  Poly g = f.monic();
  // x = 0 first, so the constant term below is nonzero
  if (g.degree() >= 1 && g.constant_term().is_zero()) {
    result.roots.push_back(GaussianRational());
    g = Poly::exact_div(g, Poly::variable());
  }
  if (g.degree() >= 1) {
    std::vector<GaussianRational> nonzero_roots;
    // clear denominators to land in Z[i]
    Integer mult = 1;
    for (const auto& c : g.coeffs()) {
      mult = lcm(mult, c.re.get_den());
      mult = lcm(mult, c.im.get_den());
    }
    std::vector<GaussInt> zc;
    zc.reserve(g.coeffs().size());
    for (const auto& c : g.coeffs())
      zc.push_back(GaussInt{Integer(c.re.get_num() * (mult / c.re.get_den())),
                            Integer(c.im.get_num() * (mult / c.im.get_den()))});
    GaussInt content = zc[0];
    for (std::size_t k = 1; k < zc.size(); ++k) content = gauss_gcd(content, zc[k]);
    GaussInt trailing{0, 0}, lead = zc.back();
    for (const auto& c : zc)
      if (!c.is_zero()) {
        trailing = c;
        break;
      }
    Integer n_tr = trailing.norm() / content.norm();
    Integer n_ld = lead.norm() / content.norm();
    const Integer cap = 1000000;
    if (n_tr > cap || n_ld > cap)
      throw Error("root search aborted: coefficient norm " + n_tr.get_str() + "/" + n_ld.get_str() +
                  " exceeds cap 10^6");
    auto content_div = [&](const GaussInt& v) {
      Integer n = content.norm();
      GaussInt p = v * content.conj();
      return GaussInt{p.re / n, p.im / n};
    };
    std::vector<GaussInt> ps = gauss_divisors(content_div(trailing));
    std::vector<GaussInt> qs = gauss_divisors(content_div(lead));
    auto less = [](const GaussianRational& a, const GaussianRational& b) { return scalar_less(a, b); };
    std::set<GaussianRational, decltype(less)> seen(less);
    for (const GaussInt& p : ps) {
      for (const GaussInt& q : qs) {
        GaussianRational base(make_rational(p.re, 1), make_rational(p.im, 1));
        GaussianRational den(make_rational(q.re, 1), make_rational(q.im, 1));
        GaussianRational ratio = base / den;
        for (int u = 0; u < 4; ++u) {
          if (seen.insert(ratio).second && g.eval(ratio).is_zero()) nonzero_roots.push_back(ratio);
          ratio = ratio * GaussianRational::i();
        }
      }
    }
    for (const auto& r : nonzero_roots) g = Poly::exact_div(g, Poly::linear_from_root(r));
    result.roots.insert(result.roots.end(), nonzero_roots.begin(), nonzero_roots.end());
  }
  std::sort(result.roots.begin(), result.roots.end(), scalar_less);
  result.cofactor = g.monic();
  return result;
}

int cmp(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int k = 0; k <= a.degree(); ++k) {
    int c = cmp(a.coeff(k), b.coeff(k));
    if (c != 0) return c;
  }
  return 0;
}

std::size_t bit_size(const Poly& p) {
  std::size_t s = 0;
  for (const auto& c : p.coeffs()) s += bit_size(c);
  return s;
}

std::string to_string(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    GaussianRational c = p.coeff(k);
    if (c.is_zero()) continue;
    std::string cs = to_string(c);
    bool needs_parens = k > 0 && cs.find_first_of("+-", 1) != std::string::npos;
    std::string term;
    if (k == 0) {
      term = cs;
    } else {
      std::string pow = k == 1 ? var : var + "^" + std::to_string(k);
      if (c.is_one())
        term = pow;
      else if (c == GaussianRational(-1))
        term = "-" + pow;
      else if (needs_parens)
        term = "(" + cs + ")" + pow;
      else
        term = cs + pow;
    }
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += term;
    } else {
      out += "+" + term;
    }
  }
  return out;
}

}  // namespace liederiv
