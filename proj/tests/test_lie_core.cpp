#include <doctest.h>

#include <random>

#include "liederiv/algebra_json.hpp"
#include "liederiv/catalog.hpp"

using namespace liederiv;

namespace {

Matrix<GaussianRational> random_invertible(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long> dist(-3, 3);
  for (;;) {
    Matrix<GaussianRational> p(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) p.at(i, j) = GaussianRational(dist(rng), 0);
    try {
      inverse(p);
      return p;
    } catch (const SingularMatrix&) {
    }
  }
}

std::vector<GaussianRational> random_vector(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long> dist(-5, 5);
  std::vector<GaussianRational> v(n);
  for (auto& x : v) x = GaussianRational(dist(rng), dist(rng));
  return v;
}

}  // namespace

TEST_CASE("catalog algebras satisfy the Jacobi identity") {
  CHECK_FALSE(validate(catalog_build("A3.1")).has_value());
  CHECK_FALSE(validate(catalog_build("sl2")).has_value());
  for (const auto& entry : catalog_entries()) {
    std::optional<GaussianRational> param;
    if (entry.parameter_arity == 1) param = GaussianRational(make_rational(2, 3), make_rational(1, 5));
    CHECK_FALSE(validate(catalog_build(entry.key, param)).has_value());
  }
}

TEST_CASE("validate reports a Jacobi violation with indices") {
  // [e1,e2]=e3, [e1,e3]=e1, [e2,e3]=0 breaks Jacobi on (1,2,3)
  auto bad = LieAlgebraBuilder(3).bracket(1, 2, {{3, 1}}).bracket(1, 3, {{1, 1}}).build();
  auto violation = validate(bad);
  REQUIRE(violation.has_value());
  CHECK(violation->i == 1);
  CHECK(violation->j == 2);
  CHECK(violation->k == 3);
  CHECK_FALSE(violation->residual.is_zero());
}

TEST_CASE("bracket evaluation") {
  auto l2 = catalog_build("L2");
  CHECK(l2.bracket(l2.basis_vector(0), l2.basis_vector(1)) == std::vector<GaussianRational>{0, 1});
  auto a34 = catalog_build("A3.4");
  CHECK(a34.bracket(a34.basis_vector(1), a34.basis_vector(2)) ==
        std::vector<GaussianRational>{0, GaussianRational(-1), 0});

  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    auto x = random_vector(rng, 3);
    CHECK(a34.bracket(x, x) == std::vector<GaussianRational>(3));
  }
}

TEST_CASE("bracket satisfies Jacobi on random vectors for catalog algebras") {
  std::mt19937_64 rng(59);
  for (const char* key : {"L2", "A3.2", "A3.8", "L17.9"}) {
    auto algebra = catalog_build(key);
    int n = algebra.dim();
    for (int trial = 0; trial < 20; ++trial) {
      auto x = random_vector(rng, n), y = random_vector(rng, n), z = random_vector(rng, n);
      auto s1 = algebra.bracket(algebra.bracket(x, y), z);
      auto s2 = algebra.bracket(algebra.bracket(y, z), x);
      auto s3 = algebra.bracket(algebra.bracket(z, x), y);
      for (int k = 0; k < n; ++k) CHECK(s1[k] + s2[k] + s3[k] == GaussianRational(0));
    }
  }
}

TEST_CASE("change of basis") {
  auto l2 = catalog_build("L2");
  auto id = Matrix<GaussianRational>::identity(2);
  CHECK(change_basis(l2, id).structure() == l2.structure());

  // swapping e1 and e2 sends [e1,e2]=e2 to [e1,e2]=-e1
  Matrix<GaussianRational> swap(2, 2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  auto swapped = change_basis(l2, swap);
  CHECK(swapped.c(0, 1, 0) == GaussianRational(-1));
  CHECK(swapped.c(0, 1, 1) == GaussianRational(0));
  CHECK(change_basis(swapped, inverse(swap)).structure() == l2.structure());

  Matrix<GaussianRational> singular(2, 2);
  CHECK_THROWS_AS(change_basis(l2, singular), SingularMatrix);
}

TEST_CASE("change of basis commutes with the bracket") {
  std::mt19937_64 rng(61);
  auto algebra = catalog_build("A3.2");
  for (int trial = 0; trial < 40; ++trial) {
    auto p = random_invertible(rng, 3);
    auto p_inv = inverse(p);
    auto changed = change_basis(algebra, p);
    auto x = random_vector(rng, 3), y = random_vector(rng, 3);
    // [x,y] in the new algebra corresponds to P [P^-1 x, P^-1 y] in the old
    auto lhs = changed.bracket(x, y);
    auto rhs = p_inv.apply(algebra.bracket(p.apply(x), p.apply(y)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("quotient algebras") {
  auto a31 = catalog_build("A3.1");

  auto trivial = quotient(a31, Subspace::zero(3));
  CHECK(trivial.algebra.dim() == 3);
  CHECK(trivial.algebra.structure() == a31.structure());

  // center of A3.1 is span{e1}; the quotient is 2-dimensional abelian
  auto by_center = quotient(a31, Subspace::span_of({a31.basis_vector(0)}, 3));
  CHECK(by_center.algebra.dim() == 2);
  CHECK(by_center.algebra.structure().empty());

  auto by_all = quotient(a31, Subspace::full(3));
  CHECK(by_all.algebra.dim() == 0);

  // span{e2} is not an ideal in A3.1 ([e2,e3]=e1)
  CHECK_THROWS_AS(quotient(a31, Subspace::span_of({a31.basis_vector(1)}, 3)), NotAnIdeal);
}

TEST_CASE("quotient bracket is compatible with the projection") {
  std::mt19937_64 rng(67);
  auto algebra = catalog_build("L17.9");
  // the derived algebra is an ideal
  std::vector<std::vector<GaussianRational>> brackets;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      brackets.push_back(algebra.bracket(algebra.basis_vector(i), algebra.basis_vector(j)));
  auto ideal = Subspace::span_of(brackets, 8);
  auto q = quotient(algebra, ideal);
  for (int trial = 0; trial < 30; ++trial) {
    auto x = random_vector(rng, 8), y = random_vector(rng, 8);
    auto direct = q.projection.apply(algebra.bracket(x, y));
    auto through = q.algebra.bracket(q.projection.apply(x), q.projection.apply(y));
    CHECK(direct == through);
  }
}

TEST_CASE("catalog parameter handling") {
  CHECK_THROWS_AS(catalog_build("nope"), UnknownKey);
  CHECK_THROWS_AS(catalog_build("A3.5"), MissingParameter);
  CHECK_THROWS_AS(catalog_build("A3.5", GaussianRational(0)), ParameterViolation);
  CHECK_THROWS_AS(catalog_build("L17.13", GaussianRational(0)), ParameterViolation);
  CHECK_THROWS_AS(catalog_build("A3.1", GaussianRational(1)), ParameterViolation);

  auto a32 = catalog_build("A3.2");
  CHECK(a32.c(0, 2, 0) == GaussianRational(1));
  CHECK(a32.c(1, 2, 0) == GaussianRational(1));
  CHECK(a32.c(1, 2, 1) == GaussianRational(1));

  auto l18_0 = catalog_build("L18.25", GaussianRational(0));
  CHECK(l18_0.c(0, 3, 7) == GaussianRational(0));  // the [e1,e4] term vanishes at a=0
  CHECK_FALSE(l18_0.structure().count({0, 3}));

  auto l17 = catalog_build_spec("L17.13:-1");
  CHECK(l17.c(0, 2, 4) == GaussianRational(-1));
  auto a35 = catalog_build_spec("A3.5:1/2+1/2i");
  CHECK(a35.c(1, 2, 1) == GaussianRational(make_rational(1, 2), make_rational(1, 2)));
}

TEST_CASE("algebra json round trip") {
  auto l17 = catalog_build("L17.12");
  auto text = algebra_to_json_text(l17);
  auto back = algebra_from_json_text(text);
  CHECK(back.dim() == 8);
  CHECK(back.structure() == l17.structure());
  CHECK(back.name() == "L17.12");
}

TEST_CASE("algebra json rejects malformed files") {
  CHECK_THROWS_AS(algebra_from_json_text("not json"), ParseError);
  CHECK_THROWS_AS(algebra_from_json_text(R"({"dim": -1, "brackets": []})"), ParseError);
  CHECK_THROWS_AS(algebra_from_json_text(R"({"dim": 2, "brackets": [{"i": 2, "j": 1, "terms": []}]})"),
                  ParseError);
  CHECK_THROWS_AS(algebra_from_json_text(R"({"dim": 2, "brackets": [
      {"i": 1, "j": 2, "terms": [{"k": 1, "c": "1"}]},
      {"i": 1, "j": 2, "terms": [{"k": 2, "c": "1"}]}]})"),
                  ParseError);
  CHECK_THROWS_AS(
      algebra_from_json_text(R"({"dim": 2, "brackets": [{"i": 1, "j": 2, "terms": [{"k": 1, "c": "0.5"}]}]})"),
      ParseError);
}
