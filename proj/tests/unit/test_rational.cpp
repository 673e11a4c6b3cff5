#include <doctest.h>

#include "kas/rational.hpp"

using kas::Rational;

TEST_CASE("canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).denominator() == 1);
  CHECK(Rational(6, 3).is_integer());
}

TEST_CASE("arithmetic") {
  const Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(a / b == Rational(3, 2));
  CHECK(-a == Rational(-1, 2));
  CHECK(a.inverse() == Rational(2));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("powers") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(7, 7) >= Rational(1));
}

TEST_CASE("binomial coefficients") {
  CHECK(Rational::binomial(7, 3) == Rational(35));
  CHECK(Rational::binomial(5, 0) == Rational(1));
  CHECK(Rational::binomial(5, 5) == Rational(1));
}

TEST_CASE("printing") {
  CHECK(Rational(-3, 4).to_string() == "-3/4");
  CHECK(Rational(5).to_string() == "5");
}
