#ifndef LIEDERIV_QUOTIENT_HPP
#define LIEDERIV_QUOTIENT_HPP

#include <memory>
#include <utility>
#include <variant>

#include "liederiv/poly.hpp"

namespace liederiv {

// Raised when quotient-ring division hits a zero divisor. Carries the
// discovered factorization of the modulus; the caller restarts the
// computation modulo each factor separately.
struct SplitRequired {
  Poly f1, f2;  // monic, modulus = f1 * f2
};

// Element of Q(i)[x] / (modulus), modulus monic and squarefree. The modulus
// is shared by pointer across all elements of one computation.
class QuotientElement {
 public:
  QuotientElement(std::shared_ptr<const Poly> modulus, Poly residue)
      : mod_(std::move(modulus)), res_(reduce(*mod_, std::move(residue))) {}

  const Poly& modulus() const { return *mod_; }
  const std::shared_ptr<const Poly>& modulus_ptr() const { return mod_; }
  const Poly& residue() const { return res_; }
  bool is_zero() const { return res_.is_zero(); }

  QuotientElement with_residue(Poly r) const { return QuotientElement(mod_, std::move(r)); }

  friend QuotientElement operator+(const QuotientElement& a, const QuotientElement& b) {
    a.check_same(b);
    return a.with_residue(a.res_ + b.res_);
  }
  friend QuotientElement operator-(const QuotientElement& a, const QuotientElement& b) {
    a.check_same(b);
    return a.with_residue(a.res_ - b.res_);
  }
  friend QuotientElement operator*(const QuotientElement& a, const QuotientElement& b) {
    a.check_same(b);
    return a.with_residue(a.res_ * b.res_);
  }
  // Throws SplitRequired on a zero divisor.
  friend QuotientElement operator/(const QuotientElement& a, const QuotientElement& b);
  QuotientElement operator-() const { return with_residue(-res_); }

  friend bool operator==(const QuotientElement& a, const QuotientElement& b) {
    a.check_same(b);
    return a.res_ == b.res_;
  }

 private:
  static Poly reduce(const Poly& mod, Poly r) {
    if (r.degree() >= mod.degree()) return Poly::divrem(r, mod).second;
    return r;
  }
  void check_same(const QuotientElement& o) const {
    if (mod_ != o.mod_ && *mod_ != *o.mod_) throw Error("quotient elements over different moduli");
  }
  std::shared_ptr<const Poly> mod_;
  Poly res_;
};

// Shared-modulus factory. Validates monic, squarefree, degree >= 1.
class QuotientRing {
 public:
  explicit QuotientRing(Poly modulus);
  const Poly& modulus() const { return *mod_; }
  QuotientElement element(Poly residue) const { return QuotientElement(mod_, std::move(residue)); }
  QuotientElement zero() const { return element(Poly()); }
  QuotientElement one() const { return element(Poly(1)); }

 private:
  std::shared_ptr<const Poly> mod_;
};

// Inverse when the residue is a unit; otherwise the nontrivial factorization
// of the modulus witnessed by the common factor.
std::variant<QuotientElement, SplitRequired> quotient_invert(const QuotientElement& x);

}  // namespace liederiv

#endif
