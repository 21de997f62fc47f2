#include <doctest.h>

#include "fmm/errors.hpp"
#include "fmm/rational.hpp"

using fmm::Rational;

TEST_CASE("rational normalization") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(1, -2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(0, -5).str() == "0");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(-3, 6).str() == "-1/2");
}

TEST_CASE("rational arithmetic") {
  const Rational half(1, 2);
  const Rational third(1, 3);
  CHECK(half + third == Rational(5, 6));
  CHECK(half - third == Rational(1, 6));
  CHECK(half * third == Rational(1, 6));
  CHECK(half / third == Rational(3, 2));
  CHECK(-half == Rational(-1, 2));
  CHECK(half + (-half) == Rational(0));

  Rational acc(0);
  for (int i = 0; i < 10; ++i) acc += Rational(1, 10);
  CHECK(acc == Rational(1));
}

TEST_CASE("rational predicates and ordering") {
  CHECK(Rational(0).is_zero());
  CHECK(Rational(1).is_one());
  CHECK(Rational(-1).is_minus_one());
  CHECK(Rational(1).is_unit());
  CHECK(Rational(-1).is_unit());
  CHECK_FALSE(Rational(2).is_unit());
  CHECK_FALSE(Rational(1, 2).is_unit());
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
}

TEST_CASE("rational parse grammar") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK_THROWS_AS(Rational::parse(""), fmm::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/"), fmm::ParseError);
  CHECK_THROWS_AS(Rational::parse("/2"), fmm::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), fmm::ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), fmm::ParseError);
  CHECK_THROWS_AS(Rational::parse(" 1"), fmm::ParseError);
  CHECK_THROWS_AS(Rational::parse("1 "), fmm::ParseError);
  CHECK_THROWS_AS(Rational::parse("+1"), fmm::ParseError);
}

TEST_CASE("rational large values stay exact") {
  // 2^80 exceeds any machine integer; exactness must survive.
  Rational big(1);
  for (int i = 0; i < 80; ++i) big *= Rational(2);
  Rational small(1);
  for (int i = 0; i < 80; ++i) small /= Rational(2);
  CHECK(big * small == Rational(1));
  CHECK(big.str() == "1208925819614629174706176");
}

TEST_CASE("rational division by zero") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), fmm::ParameterError);
  CHECK_THROWS_AS(Rational(1, 0), fmm::ParameterError);
}

TEST_CASE("rational to_double") {
  CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
  CHECK(Rational(-7).to_double() == doctest::Approx(-7.0));
}
