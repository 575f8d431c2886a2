#pragma once

#include <array>
#include <optional>
#include <vector>

#include "bsdecomp/decompose.hpp"
#include "bsdecomp/koszul.hpp"

namespace bsdecomp {

struct RecursiveTerm {
    Rational coefficient;  // y_s; may be zero or negative off the stable range
    DegreeSequence sequence;
    int phase;        // 1, 2, or 3
    Position target;  // entry this step was chosen to zero
};

/// Output of the recursive three-phase decomposition of
/// beta(a_1..a_c, a_next) driven by the greedy decomposition of the base
/// diagram beta(a_1..a_c).
///
/// Invariants on success: sum_s y_s pi(e^s) equals the extended diagram
/// exactly (the error diagram is zero); the canonical term list is
/// palindromic with check-dual-paired sequences.
struct RecursiveReport {
    DegreeTuple base;
    Int a_next;
    int elimination_size = 0;  // m, terms in the base decomposition
    int phase2_steps = 0;      // c-1, or 0 when a_next equals the largest base degree
    std::vector<RecursiveTerm> terms;  // N = 2m + phase2_steps
    Diagram error_diagram;             // zero whenever new_algorithm returns
    std::vector<Rational> remainders;  // r_1..r_m
    Rational stability_bound;          // max{a, r_s/z_s}

    bool is_chain = false;
    bool all_positive = false;
    bool has_zero_coefficient = false;
    bool symmetric = false;             // palindrome on the canonical term list
    bool agrees_with_standard = false;  // greedy run on the extended tuple yields the same terms
    bool compatible_order = false;      // greedy elimination order extends the base order

    std::vector<DegreeSequence> sequences() const;
    std::vector<Term> plain_terms() const;

    RecursiveReport(DegreeTuple base_, Int a_next_, int columns)
        : base(std::move(base_)), a_next(a_next_), error_diagram(columns) {}
};

/// Three-phase decomposition of beta(base + a_next).
///
/// Phase 1 extends each base degree sequence by a + a_next and zeroes the
/// base elimination positions in order, the last step targeting
/// (c, a). Phase 2 (skipped when a_next equals the largest base degree)
/// walks columns c-1..1 from right to left, moving one sequence slot to
/// a_1+..+a_{c-k} + a_next per step. Phase 3 uses the check duals of the
/// Phase 1 sequences in reverse and zeroes the mirrored positions. The
/// remaining error diagram must vanish; InternalInconsistency otherwise.
///
/// Throws CodimensionTooSmall (c < 2), ANextTooSmall, DegenerateSequence
/// (a Phase 2 sequence fails strict increase), MassEliminationUnsupported.
RecursiveReport new_algorithm(const DegreeTuple& base, Int a_next);

/// Remainders r_1..r_m of the base decomposition: r_1 = (j_1 - a) z_1 and
/// r_k = (j_k - a)/p_k * b_k - sum_{s<k} pi(d^s)_{i_k,j_k}/p_k * r_s,
/// where the extension coefficients satisfy y_s = z_s * a_next - r_s on
/// the stable range. Independent of a_next.
std::vector<Rational> remainders(const DegreeTuple& base);

/// max{a, r_1/z_1, ..., r_m/z_m}; extension degrees strictly above it give
/// positive coefficients and the true greedy decomposition.
Rational stability_bound(const DegreeTuple& base);

struct ConjectureRow {
    int index;  // term index s, with m < s < m + c
    Rational predicted;
    Rational actual;
    bool equal;
};

/// Comparison of the Phase 2 coefficients against the closed-form guess
/// c! * a_1...a_c * (a_next - sum_{i<=s-m} (a_{c+1-i} - a_i)).
struct ConjectureReport {
    Rational bound;
    bool bound_met = false;  // a_next > bound; comparison still runs otherwise
    std::vector<ConjectureRow> rows;
    bool all_equal = true;
};

ConjectureReport conjecture_phase2(const DegreeTuple& base, Int a_next);

struct LinearFit {
    Rational slope;
    Rational intercept;
};

/// Stabilization analysis for beta(base + t).
///
/// `compatible_order` and `term_count` describe the requested a_next. The
/// window fields evaluate three consecutive extension degrees above the
/// stability bound: the leading m coefficients are interpolated from the
/// first two points, checked against the third, and compared with the
/// remainder recursion (slope z_s, intercept -r_s). The trailing m
/// coefficients are fitted the same way from the mirrored indices.
struct StabilityReport {
    DegreeTuple base;
    Int a_next;
    Rational bound;
    bool compatible_order = false;
    int term_count = 0;

    std::array<Int, 3> window_points{};
    std::array<int, 3> window_term_counts{};
    bool term_count_constant = false;
    int expected_term_count = 0;  // 2m + c - 1
    bool term_count_as_expected = false;
    std::vector<LinearFit> leading_fits;   // s = 1..m
    std::vector<LinearFit> trailing_fits;  // s = N+1-m..N, mirrored order
    bool linear_on_third_point = false;
    bool matches_remainder_recursion = false;

    explicit StabilityReport(DegreeTuple base_, Int a_next_)
        : base(std::move(base_)), a_next(a_next_) {}
};

StabilityReport stability_report(const DegreeTuple& base, Int a_next);

}  // namespace bsdecomp
