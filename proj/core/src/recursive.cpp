#include "bsdecomp/recursive.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "bsdecomp/errors.hpp"

namespace bsdecomp {
namespace {

// Base decomposition with the per-step data the recursion consumes. The
// final step is keyed to position (c, a) even though it zeroes the whole
// remaining pure shape.
struct BaseAnalysis {
    Diagram betti;
    GreedyResult greedy;
    Int total;                              // a
    std::vector<Position> step_positions;   // s = 1..m
    std::vector<Rational> eliminated;       // b_s, entries of the source diagram
    std::vector<Rational> pure_at_step;     // p_s = pi(d^s) at step position s
    std::vector<Diagram> pure_diagrams;     // pi(d^s)

    int steps() const { return static_cast<int>(step_positions.size()); }

    BaseAnalysis(Diagram betti_, GreedyResult greedy_)
        : betti(std::move(betti_)), greedy(std::move(greedy_)), total(0) {}
};

BaseAnalysis analyze_base(const DegreeTuple& base) {
    BaseAnalysis out(betti_ci(base), GreedyResult{});
    out.greedy = decompose(out.betti);
    if (out.greedy.record.has_mass_elimination()) {
        throw MassEliminationUnsupported(
            "base diagram has a multi-position step before the final one");
    }
    out.total = base.total();

    const int m = out.greedy.record.steps();
    const auto& terms = out.greedy.decomposition.terms;
    for (int s = 0; s < m; ++s) {
        Position pos{0, 0};
        if (s + 1 < m) {
            pos = out.greedy.record.singletons[s]->position;
        } else {
            pos = Position{base.codim(), terms[s].sequence.back()};
        }
        const Diagram pure = pure_diagram(terms[s].sequence);
        out.step_positions.push_back(pos);
        out.eliminated.push_back(out.betti.at(pos));
        out.pure_at_step.push_back(pure.at(pos));
        out.pure_diagrams.push_back(pure);
    }
    return out;
}

std::vector<Rational> compute_remainders(const BaseAnalysis& base) {
    const int m = base.steps();
    std::vector<Rational> r;
    r.reserve(m);
    for (int k = 0; k < m; ++k) {
        const Position& pos = base.step_positions[k];
        Rational numerator = from_int(pos.degree - base.total) * base.eliminated[k];
        for (int s = 0; s < k; ++s) {
            numerator -= base.pure_diagrams[s].at(pos) * r[s];
        }
        r.push_back(numerator / base.pure_at_step[k]);
    }
    return r;
}

Rational bound_from(const BaseAnalysis& base, const std::vector<Rational>& r) {
    Rational bound = from_int(base.total);
    for (int s = 0; s < base.steps(); ++s) {
        Rational ratio = r[s] / base.greedy.decomposition.terms[s].coefficient;
        if (ratio > bound) bound = std::move(ratio);
    }
    return bound;
}

bool palindromic(const std::vector<Term>& terms) {
    const std::size_t n = terms.size();
    for (std::size_t s = 0; 2 * s < n; ++s) {
        const Term& mirror = terms[n - 1 - s];
        if (terms[s].coefficient != mirror.coefficient) return false;
        if (terms[s].sequence != check_dual(mirror.sequence)) return false;
    }
    return true;
}

// The base elimination order must be the start of the extended one: equal
// singleton steps, then an extended step m zeroing part of the base's
// final set.
bool order_is_compatible(const EliminationRecord& base, const EliminationRecord& extended) {
    const int m = base.steps();
    if (extended.steps() < m) return false;
    for (int s = 0; s + 1 < m; ++s) {
        if (extended.order[s] != base.order[s]) return false;
    }
    const auto& final_base = base.order[m - 1];
    for (const Position& pos : extended.order[m - 1]) {
        if (std::find(final_base.begin(), final_base.end(), pos) == final_base.end()) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::vector<DegreeSequence> RecursiveReport::sequences() const {
    std::vector<DegreeSequence> out;
    out.reserve(terms.size());
    for (const RecursiveTerm& term : terms) out.push_back(term.sequence);
    return out;
}

std::vector<Term> RecursiveReport::plain_terms() const {
    std::vector<Term> out;
    out.reserve(terms.size());
    for (const RecursiveTerm& term : terms) {
        out.push_back(Term{term.coefficient, term.sequence});
    }
    return out;
}

RecursiveReport new_algorithm(const DegreeTuple& base, Int a_next) {
    const int c = base.codim();
    if (c < 2) throw CodimensionTooSmall("recursive decomposition needs codimension > 1");
    if (a_next < base.largest()) {
        throw ANextTooSmall("extension degree " + std::to_string(a_next) +
                            " below largest base degree " + std::to_string(base.largest()));
    }

    const BaseAnalysis bd = analyze_base(base);
    const int m = bd.steps();
    const Int a = bd.total;
    const Int top = a + a_next;

    RecursiveReport report(base, a_next, c + 2);
    report.elimination_size = m;
    report.remainders = compute_remainders(bd);
    report.stability_bound = bound_from(bd, report.remainders);

    const DegreeTuple extended_tuple = extend(base, a_next);
    const Diagram extended = betti_ci(extended_tuple);
    Diagram running = extended;

    auto subtract_step = [&](const DegreeSequence& seq, const Position& target, int phase) {
        const Diagram pure = pure_diagram(seq);
        Rational y = running.at(target) / pure.at(target);
        running = axpy(running, -y, pure);
        report.terms.push_back(RecursiveTerm{std::move(y), seq, phase, target});
    };

    // Phase 1: replay the base elimination order on the extended diagram.
    for (int s = 0; s < m; ++s) {
        const DegreeSequence e = concat(bd.greedy.decomposition.terms[s].sequence, top);
        subtract_step(e, bd.step_positions[s], 1);
    }

    // Phase 2: walk columns c-1..1 right to left, moving slot c-k+1 of the
    // previous sequence up to a_1+..+a_{c-k} + a_next.
    if (a_next != base.largest()) {
        report.phase2_steps = c - 1;
        std::vector<Int> prefix(c + 1, 0);  // prefix[i] = a_1 + .. + a_i
        for (int i = 0; i < c; ++i) prefix[i + 1] = prefix[i] + base[i];

        std::vector<Int> work = report.terms.back().sequence.values();
        for (int k = 1; k <= c - 1; ++k) {
            work[c - k + 1] = prefix[c - k] + a_next;
            if (work[c - k] >= work[c - k + 1]) {
                throw DegenerateSequence("phase 2 step " + std::to_string(k) +
                                         " is not strictly increasing for extension degree " +
                                         std::to_string(a_next));
            }
            const DegreeSequence e((std::vector<Int>(work)));
            subtract_step(e, Position{c - k, e[c - k]}, 2);
        }
    }

    // Phase 3: check duals of the Phase 1 sequences in reverse. Step
    // N+1-s' zeroes the mirror of the position where sequence s' first
    // departs from its predecessor; the very last step mirrors the first
    // eliminated position and must empty the diagram.
    for (int t = 0; t < m; ++t) {
        const int mirror = m - t;  // 1-based Phase 1 index
        const DegreeSequence e = check_dual(report.terms[mirror - 1].sequence);
        Position target{0, 0};
        if (mirror >= 2) {
            const Position& prev = bd.step_positions[mirror - 2];
            const Int degree = bd.greedy.decomposition.terms[mirror - 1].sequence[prev.column];
            target = Position{c + 1 - prev.column, top - degree};
        } else {
            const Position& first = bd.step_positions[0];
            target = Position{c + 1 - first.column, top - first.degree};
        }
        subtract_step(e, target, 3);
    }

    report.error_diagram = running;
    if (!running.is_zero()) {
        throw InternalInconsistency("recursive decomposition left a nonzero error diagram for (" +
                                    std::to_string(a_next) + ")-extension");
    }

    report.is_chain = is_chain(report.sequences());
    report.all_positive = true;
    for (const RecursiveTerm& term : report.terms) {
        if (term.coefficient <= 0) report.all_positive = false;
        if (term.coefficient == 0) report.has_zero_coefficient = true;
    }
    report.symmetric = palindromic(merge_coincident(report.plain_terms()));

    const GreedyResult standard = decompose(extended);
    report.agrees_with_standard =
        canonical_terms(report.plain_terms()) == canonical_terms(standard.decomposition.terms);
    report.compatible_order = order_is_compatible(bd.greedy.record, standard.record);
    return report;
}

std::vector<Rational> remainders(const DegreeTuple& base) {
    return compute_remainders(analyze_base(base));
}

Rational stability_bound(const DegreeTuple& base) {
    const BaseAnalysis bd = analyze_base(base);
    return bound_from(bd, compute_remainders(bd));
}

ConjectureReport conjecture_phase2(const DegreeTuple& base, Int a_next) {
    ConjectureReport report;
    report.bound = stability_bound(base);
    report.bound_met = from_int(a_next) > report.bound;

    const RecursiveReport run = new_algorithm(base, a_next);
    const int c = base.codim();
    const int m = run.elimination_size;

    Rational prefactor = 1;
    for (int i = 2; i <= c; ++i) prefactor *= i;
    for (Int degree : base.degrees()) prefactor *= from_int(degree);

    for (int k = 1; k <= run.phase2_steps; ++k) {
        Int defect = 0;
        for (int i = 1; i <= k; ++i) defect += base[c - i] - base[i - 1];
        ConjectureRow row;
        row.index = m + k;
        row.predicted = prefactor * from_int(a_next - defect);
        row.actual = run.terms[m + k - 1].coefficient;
        row.equal = row.predicted == row.actual;
        report.all_equal = report.all_equal && row.equal;
        report.rows.push_back(std::move(row));
    }
    return report;
}

StabilityReport stability_report(const DegreeTuple& base, Int a_next) {
    StabilityReport report(base, a_next);
    report.bound = stability_bound(base);

    const RecursiveReport requested = new_algorithm(base, a_next);
    report.term_count = static_cast<int>(requested.terms.size());
    report.compatible_order = requested.compatible_order;

    const int m = requested.elimination_size;
    const int c = base.codim();
    report.expected_term_count = 2 * m + c - 1;

    const Int first_point = std::max(a_next, floor_to_int(report.bound) + 1);
    std::vector<RecursiveReport> window;
    for (int k = 0; k < 3; ++k) {
        report.window_points[k] = first_point + k;
        window.push_back(new_algorithm(base, first_point + k));
    }
    report.term_count_constant = true;
    report.term_count_as_expected = true;
    for (int k = 0; k < 3; ++k) {
        report.window_term_counts[k] = static_cast<int>(window[k].terms.size());
        report.term_count_constant &= report.window_term_counts[k] == report.window_term_counts[0];
        report.term_count_as_expected &= report.window_term_counts[k] == report.expected_term_count;
    }

    const int total_terms = report.window_term_counts[0];
    auto fit = [&](int index) {
        const Rational& y0 = window[0].terms[index].coefficient;
        const Rational& y1 = window[1].terms[index].coefficient;
        Rational slope = y1 - y0;  // consecutive integer points
        Rational intercept = y0 - slope * from_int(report.window_points[0]);
        return LinearFit{std::move(slope), std::move(intercept)};
    };
    auto linear_at_third = [&](const LinearFit& f, int index) {
        return f.slope * from_int(report.window_points[2]) + f.intercept ==
               window[2].terms[index].coefficient;
    };

    report.linear_on_third_point = true;
    report.matches_remainder_recursion = true;
    const std::vector<Rational>& r = requested.remainders;
    const GreedyResult base_greedy = decompose(betti_ci(base));
    for (int s = 0; s < m; ++s) {
        LinearFit lead = fit(s);
        report.linear_on_third_point &= linear_at_third(lead, s);
        report.matches_remainder_recursion &=
            lead.slope == base_greedy.decomposition.terms[s].coefficient && lead.intercept == -r[s];
        report.leading_fits.push_back(std::move(lead));

        const int mirrored = total_terms - 1 - s;
        LinearFit trail = fit(mirrored);
        report.linear_on_third_point &= linear_at_third(trail, mirrored);
        report.trailing_fits.push_back(std::move(trail));
    }
    return report;
}

}  // namespace bsdecomp
