#include <doctest.h>

#include <stdexcept>

#include "evograph/rational.hpp"

using evograph::Rational;

TEST_CASE("construction normalizes sign and gcd") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parsing integers, fractions and decimals") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("22/25") == Rational(22, 25));
  CHECK(Rational::parse("-1/2") == Rational(-1, 2));
  CHECK(Rational::parse("0.88") == Rational(22, 25));
  CHECK(Rational::parse("-1.5") == Rational(-3, 2));
  CHECK(Rational::parse("1.74") == Rational(87, 50));
  CHECK(Rational::parse("+0.5") == Rational(1, 2));
}

TEST_CASE("parsing rejects exponents and malformed input") {
  CHECK_THROWS_AS(Rational::parse("1e-3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1E3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("."), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("two"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
  CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
  CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
  CHECK(Rational(5, 6) / Rational(5, 3) == Rational(1, 2));
  CHECK(-Rational(2, 3) == Rational(-2, 3));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("comparisons distinguish close values") {
  CHECK(Rational(1, 3) > Rational(333333333, 1000000000));
  CHECK(Rational(1, 3) < Rational(333333334, 1000000000));
  CHECK(Rational(22, 25) == Rational::parse("0.88"));
  const Rational x(1000000007, 1000000009);
  const Rational y(1000000006, 1000000008);
  CHECK(x > y);
}

TEST_CASE("overflow throws instead of wrapping") {
  const Rational big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * big, std::overflow_error);
  const Rational p(INT64_MAX - 1, 3);
  const Rational q(2, INT64_MAX - 4);
  CHECK_THROWS_AS(p + q, std::overflow_error);
}

TEST_CASE("string forms") {
  CHECK(Rational(22, 25).to_string() == "22/25");
  CHECK(Rational(22, 25).to_decimal_string() == "0.88");
  CHECK(Rational(-3, 2).to_decimal_string() == "-1.5");
  CHECK(Rational(1, 3).to_decimal_string() == "1/3");
  CHECK(Rational(5).to_decimal_string() == "5");
  CHECK(Rational(1, 8).to_decimal_string() == "0.125");
}
