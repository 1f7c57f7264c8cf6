#include "liederiv/scalar.hpp"

#include <cctype>

namespace liederiv {

int cmp(const Rational& a, const Rational& b) {
  return mpq_cmp(a.get_mpq_t(), b.get_mpq_t());
}

int cmp(const GaussianRational& a, const GaussianRational& b) {
  int c = cmp(a.re, b.re);
  return c != 0 ? c : cmp(a.im, b.im);
}

std::size_t bit_size(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

std::size_t bit_size(const GaussianRational& z) {
  return bit_size(z.re) + bit_size(z.im);
}

std::string to_string(const Rational& q) {
  return q.get_str();
}

std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return to_string(z.re);
  std::string im_part;
  if (z.im == 1) {
    im_part = "i";
  } else if (z.im == -1) {
    im_part = "-i";
  } else {
    im_part = to_string(z.im) + "i";
  }
  if (z.re == 0) return im_part;
  if (z.im > 0) return to_string(z.re) + "+" + im_part;
  return to_string(z.re) + im_part;  // im_part already starts with '-'
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// signed integer / unsigned integer, e.g. "-3/4". Consumes the whole view.
Rational parse_ratio(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = slash == std::string_view::npos ? s : s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("invalid scalar '" + std::string(whole) + "'");
  Rational q = make_rational(Integer(std::string(num), 10), Integer(std::string(den), 10));
  return neg ? Rational(-q) : q;
}

// One term of the scalar grammar: "<ratio>", "<ratio>i", "i", "-i".
// Returns (value, is_imaginary).
std::pair<Rational, bool> parse_term(std::string_view s, std::string_view whole) {
  if (s.empty()) throw ParseError("invalid scalar '" + std::string(whole) + "'");
  bool imaginary = s.back() == 'i';
  if (imaginary) s.remove_suffix(1);
  if (s.empty() || s == "+" || s == "-") {
    // bare "i" / "-i"; valid only as an imaginary unit
    if (!imaginary) throw ParseError("invalid scalar '" + std::string(whole) + "'");
    return {s == "-" ? Rational(-1) : Rational(1), true};
  }
  return {parse_ratio(s, whole), imaginary};
}

}  // namespace

Rational parse_rational(std::string_view text) {
  return parse_ratio(text, text);
}

GaussianRational parse_scalar(std::string_view text) {
  if (text.empty()) throw ParseError("empty scalar");
  // Split at the last top-level sign (skipping a leading sign); the syntax
  // is real part first, imaginary part second.
  std::size_t split = std::string_view::npos;
  for (std::size_t p = 1; p < text.size(); ++p) {
    if (text[p] == '+' || text[p] == '-') split = p;
  }
  if (split != std::string_view::npos) {
    auto [re, re_imag] = parse_term(text.substr(0, split), text);
    auto [im, im_imag] = parse_term(text.substr(split), text);
    if (re_imag || !im_imag) throw ParseError("invalid scalar '" + std::string(text) + "'");
    return {re, im};
  }
  auto [v, imag] = parse_term(text, text);
  return imag ? GaussianRational(Rational(0), v) : GaussianRational(v);
}

}  // namespace liederiv
