#include "liederiv/quotient.hpp"

namespace liederiv {

QuotientRing::QuotientRing(Poly modulus) {
  if (modulus.degree() < 1) throw InvalidModulus("degree must be at least 1");
  if (!modulus.is_monic()) throw InvalidModulus("must be monic");
  if (poly_gcd(modulus, modulus.derivative()).degree() != 0)
    throw InvalidModulus("must be squarefree");
  mod_ = std::make_shared<const Poly>(std::move(modulus));
}

std::variant<QuotientElement, SplitRequired> quotient_invert(const QuotientElement& x) {
  if (x.is_zero()) throw ZeroResidue();
  // extended Euclid on (residue, modulus), tracking the residue cofactor
  Poly r0 = x.residue(), r1 = x.modulus();
  Poly s0(1), s1;
  while (!r1.is_zero()) {
    auto [q, r] = Poly::divrem(r0, r1);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() == 0) {
    // s0 * residue ≡ r0 (mod modulus); scale to 1
    return x.with_residue(r0.leading().inverse() * s0);
  }
  Poly f1 = r0.monic();
  Poly f2 = Poly::exact_div(x.modulus(), f1).monic();
  return SplitRequired{std::move(f1), std::move(f2)};
}

QuotientElement operator/(const QuotientElement& a, const QuotientElement& b) {
  a.check_same(b);
  if (b.is_zero()) throw DivisionByZero();
  auto inv = quotient_invert(b);
  if (auto* split = std::get_if<SplitRequired>(&inv)) throw *split;
  return a * std::get<QuotientElement>(inv);
}

}  // namespace liederiv
