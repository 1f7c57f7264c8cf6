#include <doctest.h>

#include <random>

#include "liederiv/scalar.hpp"

using namespace liederiv;

namespace {

GaussianRational random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 12);
  return {make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
}

}  // namespace

TEST_CASE("gaussian rational arithmetic basics") {
  GaussianRational i = GaussianRational::i();
  CHECK((GaussianRational(1) + i) * (GaussianRational(1) - i) == GaussianRational(2));
  GaussianRational half(make_rational(1, 2));
  CHECK(half + i + (half - i) == GaussianRational(1));
  GaussianRational q(make_rational(3, 4));
  GaussianRational d(make_rational(-2, 5));
  CHECK(q / d == GaussianRational(make_rational(-15, 8)));
}

TEST_CASE("division by zero raises") {
  CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), DivisionByZero);
  CHECK_THROWS_AS(GaussianRational(0).inverse(), DivisionByZero);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    GaussianRational a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == GaussianRational(0));
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == GaussianRational(1));
      CHECK(b / a * a == b);
    }
  }
}

TEST_CASE("scalar text syntax round trip") {
  for (const char* text : {"0", "1", "-1", "3/4", "-15/8", "i", "-i", "2i", "-1/2+3/4i", "1-i",
                           "1+i", "-2/3-5i", "7/2i"}) {
    GaussianRational v = parse_scalar(text);
    CHECK(parse_scalar(to_string(v)) == v);
  }
  CHECK(parse_scalar("-1/2+3/4i") == GaussianRational(make_rational(-1, 2), make_rational(3, 4)));
  CHECK(parse_scalar("1-i") == GaussianRational(make_rational(1), make_rational(-1)));
  CHECK(to_string(parse_scalar("2/4")) == "1/2");  // canonical form
  CHECK(to_string(GaussianRational(0, -1)) == "-i");
}

TEST_CASE("scalar parse rejects malformed input") {
  for (const char* text : {"", "1.5", "1 + i", "i+1", "++1", "1/-2", "1//2", "abc", "1+2", "3i+i"}) {
    CHECK_THROWS_AS(parse_scalar(text), ParseError);
  }
}

TEST_CASE("random print-parse round trip") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    GaussianRational v = random_scalar(rng);
    CHECK(parse_scalar(to_string(v)) == v);
  }
}

TEST_CASE("structural order is total on samples") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    GaussianRational a = random_scalar(rng), b = random_scalar(rng);
    int ab = cmp(a, b), ba = cmp(b, a);
    CHECK(ab == -ba);
    CHECK((ab == 0) == (a == b));
  }
}
