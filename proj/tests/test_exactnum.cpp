#include <doctest.h>

#include <sstream>

#include "ordcone/errors.hpp"
#include "ordcone/rational.hpp"

using namespace ordcone;

TEST_CASE("decimal strings parse exactly") {
  CHECK(Rational::from_decimal("0.4") == Rational(2, 5));
  CHECK(Rational::from_decimal("0") == Rational(0));
  CHECK(Rational::from_decimal("1.5") == Rational(3, 2));
  CHECK(Rational::from_decimal("-0.125") == Rational(-1, 8));
  CHECK(Rational::from_decimal(".5") == Rational(1, 2));
  CHECK(Rational::from_decimal("  2  ") == Rational(2));
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-7/21") == Rational(-1, 3));

  CHECK_THROWS_AS(Rational::from_decimal("1e3"), ParseError);
  CHECK_THROWS_AS(Rational::from_decimal(""), ParseError);
  CHECK_THROWS_AS(Rational::from_decimal("1.2.3"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
}

TEST_CASE("printing") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-3).str() == "-3");
  CHECK(Rational(1, 8).decimal_str() == "0.125");
  CHECK(Rational(-3, 2).decimal_str() == "-1.5");
  CHECK(Rational(1, 3).decimal_str() == "1/3");
  CHECK(Rational(7).decimal_str() == "7");

  for (const char* s : {"0.4", "12.0625", "-3.5", "100", "0.001"})
    CHECK(Rational::from_decimal(Rational::from_decimal(s).decimal_str()) == Rational::from_decimal(s));
}

TEST_CASE("arithmetic stays exact") {
  Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(Rational(1, 10) * Rational(10) == Rational(1));
  CHECK(Rational(2, 3) < Rational(3, 4));
  CHECK(-Rational(2, 3) == Rational(-2, 3));
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("mat_vec") {
  CHECK(mat_vec(RatMatrix::identity(3), RatVector{1, 2, 3}) == RatVector{1, 2, 3});
  CHECK(mat_vec(RatMatrix{RatVector{1, 1}}, RatVector{2, 5}) == RatVector{7});
  CHECK(mat_vec(RatMatrix{RatVector{1, 2}, RatVector{0, 1}}, RatVector{1, 1}) == RatVector{3, 1});
  CHECK_THROWS_AS(mat_vec(RatMatrix::identity(2), RatVector{1, 2, 3}), DimensionMismatch);
}

TEST_CASE("normalize_ray") {
  CHECK(normalize_ray(RatVector{2, 4, 0}) == RatVector{1, 2, 0});
  CHECK(normalize_ray(RatVector{0, 3, 6}) == RatVector{0, 1, 2});
  CHECK(normalize_ray(RatVector{-5, 10}) == RatVector{-1, 2});
  CHECK(normalize_ray(RatVector{Rational(1, 3), Rational(2, 3)}) == RatVector{1, 2});
  CHECK_THROWS(normalize_ray(RatVector{0, 0}));
}

TEST_CASE("rank and transpose") {
  RatMatrix m{RatVector{1, 2, 3}, RatVector{2, 4, 6}, RatVector{0, 1, 1}};
  CHECK(m.rank() == 2);
  CHECK(m.transpose().rank() == 2);
  CHECK(m.transpose()(2, 0) == Rational(3));
  CHECK(RatMatrix::identity(4).rank() == 4);
  CHECK(mat_mul(m, RatMatrix::identity(3)) == m);
}

TEST_CASE("parse_list") {
  CHECK(RatVector::parse_list("1.5, 2,1/3") == RatVector{Rational(3, 2), 2, Rational(1, 3)});
  CHECK_THROWS_AS(RatVector::parse_list("1,,2"), ParseError);
}
