#include "sfk/error.hpp"
#include "sfk/rational.hpp"

#include <doctest.h>

using sfk::Rational;

TEST_CASE("rational parsing and formatting") {
  CHECK(sfk::formatRational(sfk::parseRational("10/4")) == "5/2");
  CHECK(sfk::formatRational(sfk::parseRational("-0.25")) == "-1/4");
  CHECK(sfk::formatRational(sfk::parseRational("3")) == "3/1");
  CHECK(sfk::formatRational(sfk::parseRational("0")) == "0/1");
  CHECK(sfk::parseRational("1e-3") == sfk::makeRational(1, 1000));
  CHECK(sfk::parseRational(" 2/-4 ") == sfk::makeRational(-1, 2));
}

TEST_CASE("malformed rationals are parse errors") {
  for (const char* bad : {"1/0", "", "abc", "1/2x", "1//2", "0.5.5"}) {
    CAPTURE(bad);
    try {
      sfk::parseRational(bad);
      FAIL("accepted");
    } catch (const sfk::Error& e) {
      CHECK(e.code() == sfk::ErrorCode::Parse);
    }
  }
}

TEST_CASE("rational lists") {
  CHECK(sfk::parseRationalList("").empty());
  CHECK(sfk::parseRationalList("  ").empty());
  const auto v = sfk::parseRationalList("1/2, 1/3,1/6");
  REQUIRE(v.size() == 3);
  CHECK(sfk::sum(v) == 1);
  CHECK(sfk::isInteger(sfk::sum(v)));
  CHECK_FALSE(sfk::isInteger(sfk::makeRational(1, 2)));
  CHECK_THROWS_AS(sfk::parseRationalList("1/2,,1"), sfk::Error);
}

TEST_CASE("two-argument construction is reduced") {
  const Rational r = sfk::makeRational(2277, 576);
  CHECK(r == sfk::makeRational(253, 64));
  CHECK(sfk::formatRational(r) == "253/64");
  CHECK(sfk::makeRational(6, -4) == sfk::parseRational("-3/2"));
}
