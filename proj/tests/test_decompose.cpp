#include <doctest.h>

#include <bsdecomp/decompose.hpp>
#include <bsdecomp/errors.hpp>
#include <bsdecomp/koszul.hpp>

#include "testutil.hpp"

using namespace bsdecomp;

TEST_CASE("greedy decomposition of beta(2,3,4)") {
    const GreedyResult result = decompose(betti_ci(DegreeTuple{2, 3, 4}));
    const std::vector<Term> expected{
        {from_int(42), DegreeSequence{0, 2, 5, 9}}, {from_int(12), DegreeSequence{0, 3, 5, 9}},
        {from_int(36), DegreeSequence{0, 3, 6, 9}}, {from_int(12), DegreeSequence{0, 4, 6, 9}},
        {from_int(42), DegreeSequence{0, 4, 7, 9}},
    };
    CHECK(result.decomposition.terms == expected);
    CHECK_FALSE(result.record.has_mass_elimination());
}

TEST_CASE("a scaled pure diagram decomposes in one step") {
    const Diagram d = betti_ci(DegreeTuple{2, 2, 2});
    const GreedyResult result = decompose(d);
    REQUIRE(result.decomposition.terms.size() == 1);
    CHECK(result.decomposition.terms[0].coefficient == 48);
    CHECK(result.decomposition.terms[0].sequence == DegreeSequence{0, 2, 4, 6});
    CHECK(result.record.steps() == 1);
    CHECK_FALSE(result.record.has_mass_elimination());  // final step is exempt
}

TEST_CASE("elimination table of beta(2,3,4)") {
    const EliminationRecord record = decompose(betti_ci(DegreeTuple{2, 3, 4})).record;
    CHECK(record.steps() == 5);
    CHECK(record.table.at(Position{1, 2}) == 1);
    CHECK(record.table.at(Position{2, 5}) == 2);
    CHECK(record.table.at(Position{1, 3}) == 3);
    CHECK(record.table.at(Position{2, 6}) == 4);
    for (const Position& pos :
         {Position{0, 0}, Position{1, 4}, Position{2, 7}, Position{3, 9}}) {
        CHECK(record.table.at(pos) == 5);
    }
    CHECK(record.order[0] == std::vector<Position>{{1, 2}});
    CHECK(record.order[4] ==
          std::vector<Position>{{0, 0}, {1, 4}, {2, 7}, {3, 9}});
    // singleton bookkeeping: b_s and p_s only for singleton steps
    REQUIRE(record.singletons[0].has_value());
    CHECK(record.singletons[0]->eliminated_value == 1);
    CHECK(record.singletons[0]->pure_value == make_rational(1, 42));
    CHECK_FALSE(record.singletons[4].has_value());
}

TEST_CASE("mass elimination in beta(2,3,5,7)") {
    const EliminationRecord record = decompose(betti_ci(DegreeTuple{2, 3, 5, 7})).record;
    CHECK(record.steps() == 10);
    CHECK(record.has_mass_elimination());
    const std::vector<std::vector<Position>> expected{
        {{1, 2}},
        {{2, 5}},
        {{2, 7}},
        {{1, 3}, {3, 10}},
        {{2, 8}},
        {{1, 5}, {3, 12}},
        {{2, 9}},
        {{2, 10}},
        {{3, 14}},
        {{0, 0}, {1, 7}, {2, 12}, {3, 15}, {4, 17}},
    };
    CHECK(record.order == expected);
}

TEST_CASE("recompose is a left inverse of decompose") {
    for (int c = 1; c <= 4; ++c) {
        for (const DegreeTuple& tuple : testutil::tuples_up_to(c, 6)) {
            const Diagram d = betti_ci(tuple);
            const GreedyResult result = decompose(d);
            REQUIRE(recompose(result.decomposition) == d);
            for (const Term& term : result.decomposition.terms) {
                REQUIRE(term.coefficient > 0);
            }
            REQUIRE(is_chain([&] {
                std::vector<DegreeSequence> seqs;
                for (const Term& t : result.decomposition.terms) seqs.push_back(t.sequence);
                return seqs;
            }()));
            REQUIRE(result.record.steps() <= static_cast<int>(d.entry_count()));
        }
    }
    CHECK(recompose(Decomposition{3, {}}) == Diagram(3));
}

TEST_CASE("greedy decompositions of Gorenstein diagrams are symmetric") {
    for (int c = 1; c <= 4; ++c) {
        for (const DegreeTuple& tuple : testutil::tuples_up_to(c, 6)) {
            const auto terms = decompose(betti_ci(tuple)).decomposition.terms;
            const std::size_t n = terms.size();
            for (std::size_t s = 0; s < n; ++s) {
                REQUIRE(terms[s].coefficient == terms[n - 1 - s].coefficient);
                REQUIRE(terms[s].sequence == check_dual(terms[n - 1 - s].sequence));
            }
        }
    }
}

TEST_CASE("example 3.2 terms recompose beta(2,3,4,13)") {
    const Int a4 = 13;
    Decomposition dec;
    dec.columns = 5;
    const std::vector<std::pair<Int, Int>> coeffs{
        {42, 294},  {12, -36},  {36, 378},  {12, -144}, {42, -204}, {144, -288},
        {144, -288}, {42, -204}, {12, -144}, {36, 378},  {12, -36},  {42, 294},
    };
    const std::vector<DegreeSequence> seqs{
        {0, 2, 5, 9, 9 + a4},        {0, 3, 5, 9, 9 + a4},        {0, 3, 6, 9, 9 + a4},
        {0, 4, 6, 9, 9 + a4},        {0, 4, 7, 9, 9 + a4},        {0, 4, 7, 5 + a4, 9 + a4},
        {0, 4, 2 + a4, 5 + a4, 9 + a4}, {0, a4, 2 + a4, 5 + a4, 9 + a4},
        {0, a4, 3 + a4, 5 + a4, 9 + a4}, {0, a4, 3 + a4, 6 + a4, 9 + a4},
        {0, a4, 4 + a4, 6 + a4, 9 + a4}, {0, a4, 4 + a4, 7 + a4, 9 + a4},
    };
    for (std::size_t s = 0; s < seqs.size(); ++s) {
        dec.terms.push_back(Term{from_int(coeffs[s].first * a4 + coeffs[s].second), seqs[s]});
    }
    CHECK(recompose(dec) == betti_ci(DegreeTuple{2, 3, 4, 13}));
}

TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(decompose(Diagram(3)), EmptyColumn);
    CHECK_THROWS_AS(decompose(Diagram::from_entries(2, {{0, 0, from_int(-1)}})), NegativeEntry);
    // a column with no entries leaves the decomposable regime
    CHECK_THROWS_AS(decompose(Diagram::from_entries(2, {{1, 3, from_int(1)}})), EmptyColumn);
}

TEST_CASE("canonical term lists") {
    const std::vector<Term> raw{
        {from_int(2), DegreeSequence{0, 1}},
        {from_int(3), DegreeSequence{0, 2}},
        {from_int(-3), DegreeSequence{0, 2}},
        {from_int(4), DegreeSequence{0, 1}},
    };
    const auto merged = merge_coincident(raw);
    REQUIRE(merged.size() == 2);
    CHECK(merged[0] == Term{from_int(6), DegreeSequence{0, 1}});
    CHECK(merged[1] == Term{from_int(0), DegreeSequence{0, 2}});
    const auto canonical = canonical_terms(raw);
    REQUIRE(canonical.size() == 1);
    CHECK(canonical[0] == Term{from_int(6), DegreeSequence{0, 1}});
}
