#include <doctest.h>

#include "laminar/rational.hpp"

using namespace laminar;

TEST_CASE("fractions are printed in lowest terms") {
  CHECK(fraction_string(make_rat(2, 10)) == "1/5");
  CHECK(fraction_string(make_rat(-6, 4)) == "-3/2");
  CHECK(fraction_string(Rat(7)) == "7/1");
  CHECK_THROWS_AS(make_rat(1, 0), std::domain_error);
}

TEST_CASE("parse_fraction") {
  CHECK(parse_fraction("115/3") == make_rat(115, 3));
  CHECK(parse_fraction("42") == Rat(42));
  CHECK(parse_fraction("-4/6") == make_rat(-2, 3));
  CHECK(fraction_string(parse_fraction("4/6")) == "2/3");
  for (const char* bad : {"", "1/", "/2", "1/0", "a/3", "1/-3", "1.5", "1/2/3", " 1/2"})
    CHECK_THROWS_AS(parse_fraction(bad), std::invalid_argument);
}

TEST_CASE("decimal rendering, half away from zero") {
  // reference values from Python's decimal module (ROUND_HALF_UP, 20 digits)
  CHECK(decimal_string(make_rat(1, 3)) == "0.33333333333333333333");
  CHECK(decimal_string(make_rat(2, 3)) == "0.66666666666666666667");
  CHECK(decimal_string(make_rat(1, 7000)) == "0.00014285714285714285714");
  CHECK(decimal_string(make_rat(2255137, 1631721)) == "1.3820604135143201564");
  CHECK(decimal_string(Rat(mpz_class("123456789012345678901234"), 1000)) == "123456789012345678900");
  CHECK(decimal_string(make_rat(-5, 2), 1) == "-3");
  CHECK(decimal_string(make_rat(999999, 1000000), 3) == "1.00");
  CHECK(decimal_string(Rat(0), 3) == "0.00");
  CHECK(decimal_string(Rat(1)) == "1.0000000000000000000");
}
