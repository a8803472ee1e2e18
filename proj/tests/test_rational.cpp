#include "scl/error.hpp"
#include "scl/rational.hpp"

#include <doctest.h>

using namespace scl;

TEST_CASE("rational normalization and arithmetic")
{
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(3, 4) == Rational(-1, 4));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(7, 3).str() == "7/3");
    CHECK(Rational(4).str() == "4");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational parse")
{
    CHECK(Rational::parse("0.05") == Rational(1, 20));
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("-2/7") == Rational(-2, 7));
    CHECK(Rational::parse("1e-3") == Rational(1, 1000));
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("0.0000013") == Rational(13, 10000000));
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("rational from double is exact")
{
    CHECK(Rational::from_double(0.5) == Rational(1, 2));
    CHECK(Rational::from_double(-3.0) == Rational(-3));
    CHECK(Rational::from_double(0.1).to_double() == 0.1);
}

TEST_CASE("128-bit overflow is reported")
{
    i128 big = static_cast<i128>(1) << 126;
    CHECK_THROWS_AS(checked_mul(big, 4), OverflowError);
    CHECK_THROWS_AS(checked_add(big, big), OverflowError);
    CHECK(to_string(big) == "85070591730234615865843651857942052864");
    CHECK(to_string(-big) == "-85070591730234615865843651857942052864");
}
