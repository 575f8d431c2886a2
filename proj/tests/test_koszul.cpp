#include <doctest.h>

#include <bsdecomp/errors.hpp>
#include <bsdecomp/koszul.hpp>

#include "testutil.hpp"

using namespace bsdecomp;

TEST_CASE("betti_ci small examples") {
    const Diagram d23 = betti_ci(DegreeTuple{2, 3});
    CHECK(d23 == testutil::betti_by_enumeration(DegreeTuple{2, 3}));
    CHECK(d23.at(0, 0) == 1);
    CHECK(d23.at(1, 2) == 1);
    CHECK(d23.at(1, 3) == 1);
    CHECK(d23.at(2, 5) == 1);
    CHECK(d23.entry_count() == 4);

    // repeated degrees count as distinct generators
    const Diagram d222 = betti_ci(DegreeTuple{2, 2, 2});
    CHECK(d222.at(0, 0) == 1);
    CHECK(d222.at(1, 2) == 3);
    CHECK(d222.at(2, 4) == 3);
    CHECK(d222.at(3, 6) == 1);
    CHECK(d222.entry_count() == 4);

    const Diagram d234 = betti_ci(DegreeTuple{2, 3, 4});
    CHECK(d234.entry_count() == 8);
    for (const auto& [pos, value] : d234.entries()) CHECK(value == 1);
    CHECK(d234.at(1, 2) == 1);
    CHECK(d234.at(2, 7) == 1);
    CHECK(d234.at(3, 9) == 1);
}

TEST_CASE("betti_ci equals the subset enumeration oracle") {
    for (int c = 1; c <= 4; ++c) {
        for (const DegreeTuple& tuple : testutil::tuples_up_to(c, 6)) {
            REQUIRE(betti_ci(tuple) == testutil::betti_by_enumeration(tuple));
        }
    }
    // a couple of larger tuples, including repeats
    for (const DegreeTuple& tuple :
         {DegreeTuple{1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6},
          DegreeTuple{3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3},
          DegreeTuple{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}) {
        REQUIRE(betti_ci(tuple) == testutil::betti_by_enumeration(tuple));
    }
}

TEST_CASE("column sums are binomial coefficients") {
    for (int c = 1; c <= 5; ++c) {
        for (const DegreeTuple& tuple : testutil::tuples_up_to(c, 5)) {
            const Diagram d = betti_ci(tuple);
            std::vector<Rational> sums(c + 1, Rational(0));
            for (const auto& [pos, value] : d.entries()) sums[pos.column] += value;
            for (int i = 0; i <= c; ++i) {
                Integer expected;
                mpz_bin_uiui(expected.get_mpz_t(), c, i);
                REQUIRE(sums[i] == Rational(expected));
            }
        }
    }
}

TEST_CASE("ci invariants") {
    CHECK(ci_invariants(DegreeTuple{2, 3, 4}).pdim == 3);
    CHECK(ci_invariants(DegreeTuple{2, 3, 4}).reg == 6);
    CHECK(ci_invariants(DegreeTuple{1}).pdim == 1);
    CHECK(ci_invariants(DegreeTuple{1}).reg == 0);
    CHECK(ci_invariants(DegreeTuple{2, 3, 4, 13}).pdim == 4);
    CHECK(ci_invariants(DegreeTuple{2, 3, 4, 13}).reg == 18);
}

TEST_CASE("normalize") {
    CHECK(normalize({4, 2, 3}) == DegreeTuple{2, 3, 4});
    CHECK(normalize({5}) == DegreeTuple{5});
    CHECK_THROWS_AS(normalize({0, 2}), NonPositiveDegree);
    CHECK_THROWS_AS(normalize({}), EmptyTuple);
    CHECK_THROWS_AS(DegreeTuple({3, 2}), NotStrictlyIncreasing);
}
