#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpld/errors.hpp"
#include "mpld/weight.hpp"

using mpld::StitchWeight;

TEST_CASE("default weight is 0.1") {
  StitchWeight w;
  CHECK(w.numerator() == 1);
  CHECK(w.denominator() == 10);
  CHECK(w.to_string() == "0.1");
  CHECK(w == StitchWeight::parse("0.1"));
}

TEST_CASE("cost formatting is digit exact") {
  const StitchWeight w;
  CHECK(w.format(0, 4) == "0.4");
  CHECK(w.format(1, 205) == "21.5");
  CHECK(w.format(19, 54) == "24.4");
  CHECK(w.format(34, 97) == "43.7");
  CHECK(w.format(0, 0) == "0.0");
  CHECK(w.format(3, 0) == "3.0");
  CHECK(w.format(44, 40) == "48.0");
  CHECK(w.to_double(0, 4) == 0.4);
}

TEST_CASE("other decimal weights") {
  const auto quarter = StitchWeight::parse("0.25");
  CHECK(quarter.scaled(1, 1) == 125);
  CHECK(quarter.format(1, 2) == "1.5");
  CHECK(quarter.format(0, 1) == "0.25");

  const auto one = StitchWeight::parse("1");
  CHECK(one.format(2, 3) == "5.0");
  CHECK(one.scaled(2, 3) == 5);

  CHECK(StitchWeight::parse("0.10").format(0, 4) == "0.4");
  CHECK(StitchWeight::parse(".5").format(0, 1) == "0.5");
}

TEST_CASE("malformed weights are rejected") {
  for (const char* bad : {"", "-0.1", "1e-1", "0.1.2", "abc", ".", "0.1234567891"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(StitchWeight::parse(bad), mpld::ParseError);
  }
}
