#include <doctest.h>

#include <random>

#include <bsdecomp/degree_sequence.hpp>
#include <bsdecomp/errors.hpp>

using namespace bsdecomp;

TEST_CASE("construction validates strict increase") {
    CHECK_NOTHROW(DegreeSequence({0, 2, 5, 9}));
    CHECK_THROWS_AS(DegreeSequence({0, 2, 2}), NotStrictlyIncreasing);
    CHECK_THROWS_AS(DegreeSequence({0, 3, 1}), NotStrictlyIncreasing);
    CHECK_THROWS_AS(DegreeSequence(std::vector<Int>{}), NotStrictlyIncreasing);
}

TEST_CASE("check dual") {
    CHECK(check_dual(DegreeSequence{0, 2, 5, 9, 22}) == DegreeSequence{0, 13, 17, 20, 22});
    CHECK(check_dual(DegreeSequence{0, 3, 6}) == DegreeSequence{0, 3, 6});
    CHECK_THROWS_AS(check_dual(DegreeSequence{1, 2, 3}), FirstEntryNonzero);
}

TEST_CASE("check dual is an involution on random sequences") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len_dist(2, 6);
    std::uniform_int_distribution<Int> gap_dist(1, 6);
    for (int round = 0; round < 200; ++round) {
        std::vector<Int> values{0};
        const int len = len_dist(rng);
        while (static_cast<int>(values.size()) < len) {
            values.push_back(values.back() + gap_dist(rng));
        }
        DegreeSequence seq(values);
        DegreeSequence dual = check_dual(seq);
        CHECK(dual.front() == 0);
        CHECK(dual.back() == seq.back());
        CHECK(check_dual(dual) == seq);
    }
}

TEST_CASE("concat") {
    CHECK(concat(DegreeSequence{0, 2, 5, 9}, 22) == DegreeSequence{0, 2, 5, 9, 22});
    CHECK(concat(DegreeSequence{0, 1}, 2) == DegreeSequence{0, 1, 2});
    CHECK_THROWS_AS(concat(DegreeSequence{0, 3}, 3), NotStrictlyIncreasing);
}

TEST_CASE("componentwise order") {
    CHECK(leq(DegreeSequence{0, 2, 5, 9}, DegreeSequence{0, 3, 5, 9}));
    CHECK_FALSE(leq(DegreeSequence{0, 2, 5}, DegreeSequence{0, 1, 9}));
    CHECK_FALSE(leq(DegreeSequence{0, 1, 9}, DegreeSequence{0, 2, 5}));
    CHECK_THROWS_AS(leq(DegreeSequence{0, 1}, DegreeSequence{0, 1, 2}), LengthMismatch);
}

TEST_CASE("chain of the twelve codim-4 sequences at (2,3,4,13)") {
    std::vector<DegreeSequence> seqs{
        {0, 2, 5, 9, 22},   {0, 3, 5, 9, 22},   {0, 3, 6, 9, 22},   {0, 4, 6, 9, 22},
        {0, 4, 7, 9, 22},   {0, 4, 7, 18, 22},  {0, 4, 15, 18, 22}, {0, 13, 15, 18, 22},
        {0, 13, 16, 18, 22}, {0, 13, 16, 19, 22}, {0, 13, 17, 19, 22}, {0, 13, 17, 20, 22},
    };
    CHECK(is_chain(seqs));
    CHECK_FALSE(is_chain({{0, 2, 5}, {0, 1, 9}}));
    CHECK(is_chain({}));
}
