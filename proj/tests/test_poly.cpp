#include <doctest.h>

#include <random>

#include "liederiv/poly.hpp"
#include "liederiv/quotient.hpp"

using namespace liederiv;

namespace {

Poly make_poly(std::vector<long> coeffs) {
  std::vector<GaussianRational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}

Poly from_roots(const std::vector<GaussianRational>& roots) {
  Poly p(1);
  for (const auto& r : roots) p = p * Poly::linear_from_root(r);
  return p;
}

Poly random_poly(std::mt19937_64& rng, int max_deg = 5) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> coeff(-6, 6);
  std::vector<GaussianRational> c(deg(rng) + 1);
  for (auto& v : c) v = GaussianRational(coeff(rng), coeff(rng));
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("poly arithmetic and division") {
  Poly x = Poly::variable();
  Poly f = x * x - Poly(2);
  CHECK(f.degree() == 2);
  CHECK(f.eval(GaussianRational(3)) == GaussianRational(7));
  auto [q, r] = Poly::divrem(f, x - Poly(1));
  CHECK(q == x + Poly(1));
  CHECK(r == Poly(-1));
  CHECK(Poly::exact_div(f * f, f) == f);
  CHECK_THROWS_AS(Poly::divrem(f, Poly()), DivisionByZero);
}

TEST_CASE("poly gcd examples") {
  Poly x = Poly::variable();
  CHECK(poly_gcd(x * x - Poly(1), x - Poly(1)) == x - Poly(1));
  CHECK(poly_gcd(x * x + Poly(1), x * x + Poly(2)) == Poly(1));
  Poly f = make_poly({2, 0, 2});  // 2x^2 + 2
  CHECK(poly_gcd(f, f) == x * x + Poly(1));
  CHECK(poly_gcd(f, Poly()) == x * x + Poly(1));
  CHECK(poly_gcd(Poly(), Poly()) == Poly());
}

TEST_CASE("poly gcd divides both, cofactors coprime") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    Poly f = random_poly(rng), g = random_poly(rng);
    Poly d = poly_gcd(f, g);
    if (d.is_zero()) {
      CHECK(f.is_zero());
      CHECK(g.is_zero());
      continue;
    }
    auto [qf, rf] = Poly::divrem(f, d);
    auto [qg, rg] = Poly::divrem(g, d);
    CHECK(rf.is_zero());
    CHECK(rg.is_zero());
    if (!f.is_zero() && !g.is_zero()) CHECK(poly_gcd(qf, qg).degree() == 0);
  }
}

TEST_CASE("squarefree part") {
  Poly x = Poly::variable();
  Poly f = from_roots({1, 1, -2});  // (x-1)^2 (x+2)
  CHECK(squarefree_part(f) == from_roots({1, -2}).monic());
  CHECK(squarefree_part(x * x * x) == x);
  CHECK(squarefree_part(Poly(5)) == Poly(1));
  CHECK_THROWS_AS(squarefree_part(Poly()), ZeroPolynomial);

  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    Poly f = random_poly(rng);
    if (f.is_zero()) continue;
    Poly s = squarefree_part(f);
    if (s.degree() >= 1) CHECK(poly_gcd(s, s.derivative()).degree() == 0);
  }
}

TEST_CASE("rational roots examples") {
  Poly x = Poly::variable();
  auto r1 = gaussian_rational_roots(x * x + Poly(1));
  REQUIRE(r1.roots.size() == 2);
  CHECK(r1.roots[0] == GaussianRational(0, -1));
  CHECK(r1.roots[1] == GaussianRational(0, 1));
  CHECK(r1.cofactor == Poly(1));

  auto r2 = gaussian_rational_roots(x * x - Poly(2));
  CHECK(r2.roots.empty());
  CHECK(r2.cofactor == x * x - Poly(2));

  auto r3 = gaussian_rational_roots(from_roots({-2, GaussianRational(make_rational(-1, 2))}));
  REQUIRE(r3.roots.size() == 2);
  CHECK(r3.roots[0] == GaussianRational(-2));
  CHECK(r3.roots[1] == GaussianRational(make_rational(-1, 2)));
  CHECK(r3.cofactor == Poly(1));
}

TEST_CASE("rational roots found exhaustively at small height") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 3);
  for (int trial = 0; trial < 40; ++trial) {
    // known roots, some Gaussian, times a rootless factor
    std::vector<GaussianRational> roots;
    int count = 1 + (trial % 3);
    for (int k = 0; k < count; ++k)
      roots.emplace_back(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
    std::sort(roots.begin(), roots.end(), scalar_less);
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    Poly f = from_roots(roots);
    if (trial % 2) f = f * (Poly::variable() * Poly::variable() - Poly(2));
    auto got = gaussian_rational_roots(f);
    CHECK(got.roots == roots);
    for (const auto& r : got.roots) CHECK(f.eval(r).is_zero());
    // cofactor keeps no rational root: sample + small-height sweep
    for (int s = 0; s < 10; ++s) {
      GaussianRational pt(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
      if (got.cofactor.degree() >= 1) CHECK_FALSE(got.cofactor.eval(pt).is_zero());
    }
    for (long a = -6; a <= 6; ++a)
      for (long b = -6; b <= 6; ++b)
        if (got.cofactor.degree() >= 1)
          CHECK_FALSE(got.cofactor.eval(GaussianRational(make_rational(a, 2), make_rational(b, 2))).is_zero());
  }
}

TEST_CASE("root search cap aborts loudly") {
  Poly x = Poly::variable();
  Poly f = x - Poly(GaussianRational(1000001));  // constant term norm above cap
  CHECK_THROWS_AS(gaussian_rational_roots(f), Error);
}

TEST_CASE("quotient ring arithmetic and inversion") {
  Poly x = Poly::variable();
  QuotientRing mod_x2p1(x * x + Poly(1));
  auto inv = quotient_invert(mod_x2p1.element(x));
  REQUIRE(std::holds_alternative<QuotientElement>(inv));
  CHECK(std::get<QuotientElement>(inv).residue() == -x);

  QuotientRing split_ring((x - Poly(1)) * (x + Poly(3)));
  auto split = quotient_invert(split_ring.element(x - Poly(1)));
  REQUIRE(std::holds_alternative<SplitRequired>(split));
  CHECK(std::get<SplitRequired>(split).f1 == x - Poly(1));
  CHECK(std::get<SplitRequired>(split).f2 == x + Poly(3));

  QuotientRing mod_x2m2(x * x - Poly(2));
  auto const_inv = quotient_invert(mod_x2m2.element(Poly(2)));
  REQUIRE(std::holds_alternative<QuotientElement>(const_inv));
  CHECK(std::get<QuotientElement>(const_inv).residue() == Poly(GaussianRational(make_rational(1, 2))));

  CHECK_THROWS_AS(quotient_invert(mod_x2p1.element(Poly())), ZeroResidue);
  CHECK_THROWS_AS(QuotientRing(x * x), InvalidModulus);              // not squarefree
  CHECK_THROWS_AS(QuotientRing(Poly(2) * x), InvalidModulus);        // not monic
  CHECK_THROWS_AS(QuotientRing(Poly(1)), InvalidModulus);            // degree 0
}

TEST_CASE("evaluation at a modulus root is a ring homomorphism") {
  std::mt19937_64 rng(29);
  Poly x = Poly::variable();
  GaussianRational root(make_rational(3, 2));
  QuotientRing ring((x - Poly(root)) * (x * x + Poly(1)));  // root 3/2 among others
  for (int trial = 0; trial < 60; ++trial) {
    Poly a = random_poly(rng), b = random_poly(rng);
    auto ea = ring.element(a), eb = ring.element(b);
    CHECK((ea + eb).residue().eval(root) == a.eval(root) + b.eval(root));
    CHECK((ea * eb).residue().eval(root) == a.eval(root) * b.eval(root));
    CHECK((ea - eb).residue().eval(root) == a.eval(root) - b.eval(root));
  }
}
