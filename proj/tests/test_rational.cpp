#include <catch2/catch_amalgamated.hpp>

#include "cfn/rational.hpp"

using cfn::Rational;

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, 4) == Rational(-3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(9, 5) + Rational(1, 5) == Rational(2));
    CHECK(Rational(9, 2) - Rational(1, 2) == Rational(4));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(13, 3) / Rational(7, 3) == Rational(13, 7));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("rational ordering is exact") {
    CHECK(Rational(9, 5) < Rational(2));
    CHECK(Rational(13, 7) > Rational(9, 5));
    CHECK(Rational(5, 3) < Rational(13, 7));
    CHECK(Rational(1000000007, 1000000006) > Rational(1));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(3) <= Rational(3));
}

TEST_CASE("rational rendering") {
    CHECK(Rational(9, 2).str() == "9/2");
    CHECK(Rational(8, 2).str() == "4");
    CHECK(Rational(-13, 3).str() == "-13/3");
    CHECK(Rational(0).str() == "0");
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("9/2") == Rational(9, 2));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("-7/14") == Rational(-1, 2));
    CHECK_FALSE(Rational::parse("x/2").has_value());
    CHECK_FALSE(Rational::parse("3/0").has_value());
    CHECK_FALSE(Rational::parse("3.5").has_value());
    CHECK_FALSE(Rational::parse("").has_value());
}
