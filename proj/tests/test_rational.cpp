#include <stdexcept>

#include "doctest.h"
#include "mvf/errors.hpp"
#include "mvf/rational.hpp"

using mvf::Rat;

TEST_CASE("rationals reduce to lowest terms with positive denominator") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat(6, 3).num() == 2);
  CHECK(Rat(6, 3).den() == 1);
}

TEST_CASE("rational arithmetic matches hand-computed values") {
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(1, 2) - Rat(2, 3) == Rat(-1, 6));
  CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
  CHECK(Rat(1, 2) / Rat(3, 2) == Rat(1, 3));
  CHECK(-Rat(1, 2) == Rat(-1, 2));
}

TEST_CASE("rational ordering is the numeric one") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(0));
  CHECK(Rat(2, 3) <= Rat(2, 3));
  CHECK(Rat(5, 4) > Rat(1));
  CHECK(std::min(Rat(3, 4), Rat(2, 3)) == Rat(2, 3));
}

TEST_CASE("parse and str round-trip") {
  CHECK(Rat::parse("2/3") == Rat(2, 3));
  CHECK(Rat::parse("-1/2") == Rat(-1, 2));
  CHECK(Rat::parse("4") == Rat(4));
  CHECK(Rat::parse("4/6").str() == "2/3");
  CHECK(Rat(0).str() == "0");
  CHECK(Rat(5, 1).str() == "5");
  CHECK(Rat(-3, 7).str() == "-3/7");
  CHECK(Rat::parse(Rat(13, 64).str()) == Rat(13, 64));
}

TEST_CASE("malformed fractions are rejected") {
  CHECK_THROWS_AS(Rat::parse("1/0"), mvf::Error);
  CHECK_THROWS_AS(Rat::parse(""), mvf::Error);
  CHECK_THROWS_AS(Rat::parse("a/b"), mvf::Error);
  CHECK_THROWS_AS(Rat::parse("1/2/3"), mvf::Error);
  CHECK_THROWS_AS(Rat(1, 0), mvf::Error);
}
