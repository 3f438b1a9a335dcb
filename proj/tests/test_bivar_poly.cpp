#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "sgchrom/bivar_poly.hpp"

using namespace sgchrom;

TEST_CASE("arithmetic expands products") {
  const BivarPoly lam = BivarPoly::lambda();
  const BivarPoly mu = BivarPoly::mu();
  const BivarPoly square = (lam + mu) * (lam + mu);
  CHECK(square.coeff(2, 0) == 1);
  CHECK(square.coeff(1, 1) == 2);
  CHECK(square.coeff(0, 2) == 1);
  CHECK(square.coeff(0, 0) == 0);
  CHECK(square.degree_lambda() == 2);
  CHECK(square.degree_mu() == 2);
  CHECK(square.total_degree() == 2);
  CHECK(pow(lam + mu, 2) == square);

  const BivarPoly zero = square - square;
  CHECK(zero.is_zero());
  CHECK(zero.degree_lambda() == -1);
  CHECK(to_string(zero) == "0");
}

TEST_CASE("cancelling terms disappear") {
  BivarPoly p;
  p.add_term(1, 2, Integer(5));
  p.add_term(1, 2, Integer(-5));
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
}

TEST_CASE("evaluation matches substitution") {
  BivarPoly p = BivarPoly::monomial(2, 1, Integer(3)) - BivarPoly::lambda() +
                BivarPoly::constant(7);
  CHECK(p.eval_int(Integer(3), Integer(2)) == Integer(3 * 9 * 2 - 3 + 7));
  CHECK(p.substitute_lambda(Integer(3)) ==
        BivarPoly::monomial(0, 1, Integer(27)) + BivarPoly::constant(4));
  CHECK(p.substitute_mu(Integer(0)) == BivarPoly::constant(7) - BivarPoly::lambda());
}

TEST_CASE("mu derivative and variable swap") {
  const BivarPoly p = BivarPoly::monomial(1, 3, Integer(2)) + BivarPoly::mu();
  CHECK(p.derivative_mu() ==
        BivarPoly::monomial(1, 2, Integer(6)) + BivarPoly::constant(1));
  CHECK(p.swap_variables() ==
        BivarPoly::monomial(3, 1, Integer(2)) + BivarPoly::lambda());
}

TEST_CASE("canonical text form and parsing round-trip") {
  const BivarPoly lam = BivarPoly::lambda();
  const BivarPoly mu = BivarPoly::mu();
  CHECK(to_string(lam + mu) == "1*λ^1 + 1*μ^1");
  CHECK(to_string(BivarPoly::constant(-3) * lam * mu) == "-3*λ^1*μ^1");
  CHECK(to_string(BivarPoly::mu()) == "1*μ^1");

  const BivarPoly messy =
      pow(lam + mu, 3) - BivarPoly::monomial(2, 2, Integer(17)) - BivarPoly::constant(4);
  CHECK(parse_poly(to_string(messy)) == messy);
  CHECK(parse_poly("0") == BivarPoly());
  CHECK_THROWS_AS(parse_poly("1*x^2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("λ"), std::invalid_argument);
}

TEST_CASE("ordered terms sort by total degree then lambda degree") {
  BivarPoly p;
  p.add_term(0, 1, Integer(1));
  p.add_term(2, 0, Integer(2));
  p.add_term(1, 1, Integer(3));
  p.add_term(0, 0, Integer(4));
  const auto rows = ordered_terms(p);
  REQUIRE(rows.size() == 4);
  CHECK(std::get<0>(rows[0]) == 2);  // λ^2
  CHECK(std::get<0>(rows[1]) == 1);  // λμ
  CHECK(std::get<0>(rows[2]) == 0);  // μ
  CHECK(std::get<2>(rows[3]) == 4);  // constant
}

TEST_CASE("grid interpolation recovers exact polynomials") {
  // Values of λ+μ on the grid {1,3} x {0,2}.
  const BivarPoly p = interpolate_grid({Integer(1), Integer(3)}, {Integer(0), Integer(2)},
                                       {{Integer(1), Integer(3)}, {Integer(3), Integer(5)}}, 1);
  CHECK(p == BivarPoly::lambda() + BivarPoly::mu());

  CHECK_THROWS_AS(interpolate_grid({Integer(1), Integer(1)}, {Integer(0), Integer(2)},
                                   {{Integer(1), Integer(3)}, {Integer(3), Integer(5)}}, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(interpolate_grid({Integer(1)}, {Integer(0), Integer(2)},
                                   {{Integer(1), Integer(3)}, {Integer(3), Integer(5)}}, 1),
                  std::invalid_argument);
  // λ/2 is not an integer polynomial: values 0,1 at λ=0,2.
  CHECK_THROWS_AS(interpolate_grid({Integer(0), Integer(2)}, {Integer(0), Integer(1)},
                                   {{Integer(0), Integer(0)}, {Integer(1), Integer(1)}}, 1),
                  std::runtime_error);
}
