#include <doctest.h>

#include <bsdecomp/errors.hpp>
#include <bsdecomp/recursive.hpp>

#include "testutil.hpp"

using namespace bsdecomp;

namespace {
const DegreeTuple kBase234{2, 3, 4};
}

TEST_CASE("remainders of (2,3,4)") {
    const auto r = remainders(kBase234);
    REQUIRE(r.size() == 5);
    // r_1 = -a1*a2*(a2+a3)^2, r_4 = a1*a2*(a1^2 + 4 a1 a3 - a2 a3)
    CHECK(r[0] == from_int(-2 * 3 * 49));
    CHECK(r[1] == 36);
    CHECK(r[2] == -378);
    CHECK(r[3] == from_int(6 * (4 + 32 - 12)));
    CHECK(r[4] == 204);
}

TEST_CASE("stability bound") {
    CHECK(stability_bound(kBase234) == 12);
    // ratio list: r_s / z_s with z = (42, 12, 36, 12, 42)
    const auto r = remainders(kBase234);
    const std::vector<Rational> z{from_int(42), from_int(12), from_int(36), from_int(12),
                                  from_int(42)};
    const std::vector<Rational> expected{from_int(-7), from_int(3), make_rational(-21, 2),
                                         from_int(12), make_rational(34, 7)};
    for (std::size_t s = 0; s < 5; ++s) CHECK(r[s] / z[s] == expected[s]);

    // one-step base: bound = max(a, r_1/z_1) with r_1 = 0
    CHECK(stability_bound(DegreeTuple{1, 1}) == 2);
}

TEST_CASE("recursive decomposition at a4 = 13 reproduces the stabilized coefficients") {
    const RecursiveReport report = new_algorithm(kBase234, 13);
    REQUIRE(report.terms.size() == 12);
    CHECK(report.elimination_size == 5);
    CHECK(report.phase2_steps == 2);
    const std::vector<Int> expected{840, 120, 846, 12, 342, 1584,
                                    1584, 342, 12, 846, 120, 840};
    for (std::size_t s = 0; s < 12; ++s) {
        CHECK(report.terms[s].coefficient == expected[s]);
    }
    CHECK(report.terms[0].sequence == DegreeSequence{0, 2, 5, 9, 22});
    CHECK(report.terms[11].sequence == DegreeSequence{0, 13, 17, 20, 22});
    CHECK(report.error_diagram.is_zero());
    CHECK(report.is_chain);
    CHECK(report.all_positive);
    CHECK(report.symmetric);
    CHECK(report.agrees_with_standard);
    CHECK(report.compatible_order);
    CHECK(report.stability_bound == 12);
}

TEST_CASE("a4 = 12 gives two zero coefficients but still the greedy decomposition") {
    const RecursiveReport report = new_algorithm(kBase234, 12);
    REQUIRE(report.terms.size() == 12);
    CHECK(report.terms[3].coefficient == 0);   // y_4
    CHECK(report.terms[8].coefficient == 0);   // y_9
    for (std::size_t s = 0; s < 12; ++s) {
        if (s != 3 && s != 8) CHECK(report.terms[s].coefficient > 0);
    }
    CHECK(report.has_zero_coefficient);
    CHECK_FALSE(report.all_positive);
    CHECK(report.symmetric);
    CHECK(report.agrees_with_standard);
}

TEST_CASE("a4 = 11 gives negative coefficients and a different greedy chain") {
    const RecursiveReport report = new_algorithm(kBase234, 11);
    bool negative = false;
    for (const RecursiveTerm& term : report.terms) negative |= term.coefficient < 0;
    CHECK(negative);
    CHECK_FALSE(report.has_zero_coefficient);
    CHECK(report.error_diagram.is_zero());
    CHECK_FALSE(report.agrees_with_standard);
    // the terms still sum to the extended diagram exactly
    const Decomposition dec{report.error_diagram.columns(), report.plain_terms()};
    CHECK(recompose(dec) == betti_ci(DegreeTuple{2, 3, 4, 11}));
}

TEST_CASE("phase 2 is skipped when the extension equals the largest base degree") {
    const RecursiveReport report = new_algorithm(kBase234, 4);
    CHECK(report.phase2_steps == 0);
    CHECK(report.terms.size() == 10);  // 2m
    CHECK(report.error_diagram.is_zero());
    CHECK(report.symmetric);
}

TEST_CASE("error cases") {
    CHECK_THROWS_AS(new_algorithm(kBase234, 3), ANextTooSmall);
    CHECK_THROWS_AS(new_algorithm(DegreeTuple{5}, 6), CodimensionTooSmall);
    CHECK_THROWS_AS(new_algorithm(DegreeTuple{2, 3, 5, 7}, 20), MassEliminationUnsupported);
    CHECK_THROWS_AS(remainders(DegreeTuple{2, 3, 5, 7}), MassEliminationUnsupported);
    // phase 2 degenerates when the extension cannot clear the base tail
    CHECK_THROWS_AS(new_algorithm(DegreeTuple{1, 1, 5, 6}, 7), DegenerateSequence);
}

TEST_CASE("conjectured phase-2 coefficients") {
    const ConjectureReport report = conjecture_phase2(kBase234, 13);
    CHECK(report.bound_met);
    REQUIRE(report.rows.size() == 2);
    CHECK(report.rows[0].index == 6);
    CHECK(report.rows[0].predicted == from_int(144 * (13 - 2)));
    CHECK(report.rows[0].equal);
    CHECK(report.rows[1].index == 7);
    CHECK(report.rows[1].predicted == 1584);
    CHECK(report.rows[1].equal);
    CHECK(report.all_equal);

    // holds across codimension-3 bases
    for (const DegreeTuple& base : testutil::tuples_up_to(3, 5)) {
        const Int above = floor_to_int(stability_bound(base)) + 1;
        const ConjectureReport sample = conjecture_phase2(base, above);
        REQUIRE(sample.bound_met);
        REQUIRE(sample.all_equal);
    }

    // below the bound the comparison still runs, flagged as outside hypothesis
    const ConjectureReport low = conjecture_phase2(kBase234, 5);
    CHECK_FALSE(low.bound_met);
    CHECK(low.rows.size() == 2);
}

TEST_CASE("stability report") {
    const StabilityReport report = stability_report(kBase234, 13);
    CHECK(report.bound == 12);
    CHECK(report.term_count == 12);
    CHECK(report.compatible_order);
    CHECK(report.window_points[0] == 13);
    CHECK(report.term_count_constant);
    CHECK(report.term_count_as_expected);
    CHECK(report.expected_term_count == 12);
    REQUIRE(report.leading_fits.size() == 5);
    CHECK(report.leading_fits[0].slope == 42);
    CHECK(report.leading_fits[0].intercept == 294);
    CHECK(report.trailing_fits[0].slope == 42);
    CHECK(report.trailing_fits[0].intercept == 294);
    CHECK(report.linear_on_third_point);
    CHECK(report.matches_remainder_recursion);

    // same window regardless of where below the bound we start
    const StabilityReport late = stability_report(kBase234, 20);
    CHECK(late.window_points[0] == 20);
    CHECK(late.term_count == 12);

    const StabilityReport incompatible = stability_report(kBase234, 6);
    CHECK_FALSE(incompatible.compatible_order);
}

TEST_CASE("small sweep stays clean for codimension 2") {
    SweepConfig config;
    config.codim = 2;
    config.max_degree = 4;
    config.next_range = 4;
    config.jobs = 2;
    const SweepSummary summary = run_sweep(config);
    CHECK(summary.bases == 10);
    CHECK(summary.violations.empty());
    CHECK(summary.completed == summary.runs);
}

TEST_CASE("linearity of the leading coefficients in the extension degree") {
    for (const DegreeTuple& base :
         {DegreeTuple{1, 2}, DegreeTuple{2, 2, 3}, DegreeTuple{2, 3, 4}}) {
        const auto greedy = decompose(betti_ci(base));
        const auto r = remainders(base);
        const Int above = floor_to_int(stability_bound(base)) + 1;
        for (Int t : {above, above + 1, above + 2}) {
            const RecursiveReport run = new_algorithm(base, t);
            for (int s = 0; s < run.elimination_size; ++s) {
                REQUIRE(run.terms[s].coefficient ==
                        greedy.decomposition.terms[s].coefficient * from_int(t) - r[s]);
            }
        }
    }
}
