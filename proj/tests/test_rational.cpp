#include <stdexcept>

#include "doctest.h"
#include "symprod/rational.hpp"

using namespace symprod;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(2, 4).numerator() == 1);
    CHECK(Rational(2, 4).denominator() == 2);
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, -2).denominator() == 2);
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(0, 7) == Rational(0));
}

TEST_CASE("zero denominators and division by zero are rejected") {
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    Rational r(3);
    CHECK_THROWS_AS(r /= Rational(0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(-Rational(5, 7) == Rational(-5, 7));
    // A sum that would overflow 64-bit numerators along the way.
    Rational big(1);
    for (int i = 0; i < 40; ++i) big *= Rational(1000000007);
    CHECK(big / big == Rational(1));
}

TEST_CASE("comparisons") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(5, 5) >= Rational(1));
    CHECK(Rational(2) > Rational(1));
}

TEST_CASE("integer conversion") {
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(6, 3).as_int64() == 2);
    CHECK(!Rational(1, 2).is_integer());
    CHECK_THROWS_AS(Rational(1, 2).as_int64(), std::domain_error);
    Rational huge(1);
    for (int i = 0; i < 5; ++i) huge *= Rational(1000000007);
    CHECK_THROWS_AS(huge.as_int64(), std::overflow_error);
}

TEST_CASE("string rendering") {
    CHECK(Rational(3).str() == "3");
    CHECK(Rational(-3, 2).str() == "-3/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(0).str() == "0");
}

TEST_CASE("pow with integer exponents") {
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(2, 3), 0) == Rational(1));
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(pow(Rational(-2), 3) == Rational(-8));
    CHECK_THROWS_AS(pow(Rational(0), -1), std::domain_error);
}
