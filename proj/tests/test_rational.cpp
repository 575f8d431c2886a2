#include <doctest.h>

#include <bsdecomp/errors.hpp>
#include <bsdecomp/rational.hpp>

using namespace bsdecomp;

TEST_CASE("rationals are canonical") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(make_rational(-2, -4) == make_rational(1, 2));
    CHECK(make_rational(3, -6) == make_rational(-1, 2));
    CHECK(to_string(make_rational(-1, 48)) == "-1/48");
    CHECK(to_string(make_rational(10, 2)) == "5");
    CHECK_THROWS_AS(make_rational(1, 0), BadRational);
}

TEST_CASE("parse round trip") {
    for (const char* text : {"0", "5", "-5", "1/3", "-1/48", "34/7", "1234567890123456789/7"}) {
        CHECK(to_string(parse_rational(text)) == text);
    }
    CHECK(parse_rational("2/4") == make_rational(1, 2));
    CHECK_THROWS_AS(parse_rational(""), BadRational);
    CHECK_THROWS_AS(parse_rational("abc"), BadRational);
    CHECK_THROWS_AS(parse_rational("1/0"), BadRational);
}

TEST_CASE("floor of a rational") {
    CHECK(floor_to_int(make_rational(7, 2)) == 3);
    CHECK(floor_to_int(make_rational(-7, 2)) == -4);
    CHECK(floor_to_int(from_int(12)) == 12);
}
