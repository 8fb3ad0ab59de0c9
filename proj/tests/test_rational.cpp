#include <doctest.h>

#include "wittrb/rational.hpp"

using namespace wittrb;

TEST_CASE("rationals are canonical and exact") {
    CHECK(make_rational(4, 6) == make_rational(2, 3));
    CHECK(make_rational(4, -6) == make_rational(-2, 3));
    CHECK(make_rational(0, 5) == 0);
    CHECK(make_rational(1, 2) + make_rational(1, 3) == make_rational(5, 6));
    CHECK(make_rational(2, 21) * make_rational(-20, 3) == make_rational(-40, 63));
    CHECK(numerator(make_rational(4, -6)) == -2);
    CHECK(denominator(make_rational(4, -6)) == 3);
}

TEST_CASE("text encoding: p/q with /q omitted when 1") {
    CHECK(rational_str(make_rational(-20, 3)) == "-20/3");
    CHECK(rational_str(make_rational(7)) == "7");
    CHECK(rational_str(make_rational(0)) == "0");
    CHECK(rational_str(make_rational(6, -4)) == "-3/2");
}

TEST_CASE("parse accepts p and p/q and canonicalizes") {
    CHECK(parse_rational("2/21") == make_rational(2, 21));
    CHECK(parse_rational("-5") == make_rational(-5));
    CHECK(parse_rational("4/6") == make_rational(2, 3));
    CHECK(parse_rational("-10/4") == make_rational(-5, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("parse/format round trip on assorted values") {
    for (long long n = -12; n <= 12; ++n)
        for (long long d = 1; d <= 9; ++d) {
            const Rational r = make_rational(n, d);
            CHECK(parse_rational(rational_str(r)) == r);
        }
}

TEST_CASE("no overflow: arbitrary precision") {
    Rational big = make_rational(1);
    for (int i = 0; i < 40; ++i) big = big * make_rational(1000000, 7);
    Rational back = big;
    for (int i = 0; i < 40; ++i) back = back * make_rational(7, 1000000);
    CHECK(back == 1);
}
