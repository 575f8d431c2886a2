#include "bsdecomp/codim4.hpp"

#include <utility>

#include "bsdecomp/errors.hpp"

namespace bsdecomp {
namespace {

void validate_triple(Int a1, Int a2, Int a3) {
    DegreeTuple check{a1, a2, a3};  // validates positivity and order
    (void)check;
}

Rational R(Int value) { return from_int(value); }

std::vector<Term> merged(std::vector<Term> terms) { return merge_coincident(terms); }

}  // namespace

DegeneracyCase classify_triple(Int a1, Int a2, Int a3) {
    validate_triple(a1, a2, a3);
    if (a1 == a2 && a2 == a3) return DegeneracyCase::AllEqual;
    if (a1 == a2) return DegeneracyCase::FirstEqual;
    if (a2 == a3) return DegeneracyCase::MiddleEqual;
    return DegeneracyCase::Distinct;
}

const char* degeneracy_name(DegeneracyCase degeneracy) {
    switch (degeneracy) {
        case DegeneracyCase::Distinct: return "a1<a2<a3";
        case DegeneracyCase::MiddleEqual: return "a1<a2=a3";
        case DegeneracyCase::FirstEqual: return "a1=a2<a3";
        case DegeneracyCase::AllEqual: return "a1=a2=a3";
    }
    return "?";
}

ClosedFormDecomposition codim3_closed(Int a1, Int a2, Int a3) {
    const DegeneracyCase degeneracy = classify_triple(a1, a2, a3);
    ClosedFormDecomposition out{degeneracy, 0, {}, Rational(0), true};

    switch (degeneracy) {
        case DegeneracyCase::Distinct: {
            const Rational z1 = R(a1) * R(a2) * R(a2 + a3);
            const Rational z2 = R(a1) * R(a2) * R(a3 - a1);
            const Rational z3 = 2 * R(a1) * R(a2) * R(a1 + a3 - a2);
            out.terms = {
                Term{z1, DegreeSequence{0, a1, a1 + a2, a1 + a2 + a3}},
                Term{z2, DegreeSequence{0, a2, a1 + a2, a1 + a2 + a3}},
                Term{z3, DegreeSequence{0, a2, a1 + a3, a1 + a2 + a3}},
                Term{z2, DegreeSequence{0, a3, a1 + a3, a1 + a2 + a3}},
                Term{z1, DegreeSequence{0, a3, a2 + a3, a1 + a2 + a3}},
            };
            break;
        }
        case DegeneracyCase::MiddleEqual: {
            const Rational z = 2 * R(a1) * R(a2) * R(a2);
            out.terms = {
                Term{z, DegreeSequence{0, a1, a1 + a2, a1 + 2 * a2}},
                Term{z, DegreeSequence{0, a2, a1 + a2, a1 + 2 * a2}},
                Term{z, DegreeSequence{0, a2, 2 * a2, a1 + 2 * a2}},
            };
            break;
        }
        case DegeneracyCase::FirstEqual: {
            const Rational z = 2 * R(a1) * R(a1) * R(a3);
            out.terms = {
                Term{z, DegreeSequence{0, a1, 2 * a1, 2 * a1 + a3}},
                Term{z, DegreeSequence{0, a1, a1 + a3, 2 * a1 + a3}},
                Term{z, DegreeSequence{0, a3, a1 + a3, 2 * a1 + a3}},
            };
            break;
        }
        case DegeneracyCase::AllEqual: {
            out.terms = {
                Term{6 * R(a1) * R(a1) * R(a1), DegreeSequence{0, a1, 2 * a1, 3 * a1}},
            };
            break;
        }
    }
    return out;
}

RemainderReport codim4_remainders(Int a1, Int a2, Int a3) {
    const DegeneracyCase degeneracy = classify_triple(a1, a2, a3);
    RemainderReport out{degeneracy, {}};
    switch (degeneracy) {
        case DegeneracyCase::Distinct:
            out.values = {
                -R(a1) * R(a2) * R(a2 + a3) * R(a2 + a3),
                R(a1) * R(a2) * (R(a1) * R(a2) + 2 * R(a1) * R(a3) - R(a3) * R(a3)),
                -R(a1) * R(a2) * R(a1 - a2 + a3) * R(a1 + a2 + 4 * a3),
                R(a1) * R(a2) * (R(a1) * R(a1) + 4 * R(a1) * R(a3) - R(a2) * R(a3)),
                -R(a1) * R(a1) * R(a2) * R(a2 - 5 * a3),
            };
            break;
        case DegeneracyCase::MiddleEqual:
            out.values = {
                -4 * R(a1) * R(a2) * R(a2) * R(a2),
                2 * R(a1) * R(a1) * R(a2) * R(a2) - 2 * R(a1) * R(a2) * R(a2) * R(a2),
                4 * R(a1) * R(a1) * R(a2) * R(a2),
            };
            break;
        case DegeneracyCase::FirstEqual:
            out.values = {
                -2 * R(a1) * R(a1) * R(a3) * R(a3),
                -2 * R(a1) * R(a1) * R(a1) * R(a3) - 4 * R(a1) * R(a1) * R(a3) * R(a3),
                8 * R(a1) * R(a1) * R(a1) * R(a3),
            };
            break;
        case DegeneracyCase::AllEqual:
            out.values = {Rational(0)};
            break;
    }
    return out;
}

RatioReport codim4_ratios(Int a1, Int a2, Int a3) {
    const RemainderReport rem = codim4_remainders(a1, a2, a3);
    const ClosedFormDecomposition closed = codim3_closed(a1, a2, a3);
    RatioReport out{rem.degeneracy, {}, R(a1 + a2 + a3)};
    for (std::size_t s = 0; s < rem.values.size(); ++s) {
        Rational ratio = rem.values[s] / closed.terms[s].coefficient;
        if (ratio > out.bound) out.bound = ratio;
        out.ratios.push_back(std::move(ratio));
    }
    return out;
}

ClosedFormDecomposition codim4_closed(Int a1, Int a2, Int a3, Int a4) {
    DegreeTuple check{a1, a2, a3, a4};
    (void)check;
    const DegeneracyCase degeneracy = classify_triple(a1, a2, a3);
    const RatioReport ratios = codim4_ratios(a1, a2, a3);
    const Int top = a1 + a2 + a3 + a4;

    ClosedFormDecomposition out{degeneracy, 0, {}, ratios.bound, false};
    if (degeneracy == DegeneracyCase::FirstEqual) {
        out.case_number = 2;
        out.certified = R(a4) >= ratios.bound;
        const Rational f = 2 * R(a1) * R(a1) * R(a3);
        const Rational y1 = f * R(a3 + a4);
        const Rational y2 = f * R(a1 + 2 * a3 + a4);
        const Rational y3 = -f * R(4 * a1 - a4);
        const Rational y4 = 3 * f * R(a1 - a3 + a4);
        out.terms = merged({
            Term{y1, DegreeSequence{0, a1, 2 * a1, 2 * a1 + a3, top}},
            Term{y2, DegreeSequence{0, a1, a1 + a3, 2 * a1 + a3, top}},
            Term{y3, DegreeSequence{0, a3, a1 + a3, 2 * a1 + a3, top}},
            Term{y4, DegreeSequence{0, a3, a1 + a3, 2 * a1 + a4, top}},
            Term{y4, DegreeSequence{0, a3, a1 + a4, 2 * a1 + a4, top}},
            Term{y3, DegreeSequence{0, a4, a1 + a4, 2 * a1 + a4, top}},
            Term{y2, DegreeSequence{0, a4, a1 + a4, a1 + a3 + a4, top}},
            Term{y1, DegreeSequence{0, a4, a3 + a4, a1 + a3 + a4, top}},
        });
        return out;
    }

    out.case_number = 1;
    out.certified = R(a4) > ratios.bound;
    const Rational f = R(a1) * R(a2);
    const Rational y1 = f * R(a2 + a3) * R(a2 + a3 + a4);
    const Rational y2 =
        -f * (R(a1) * R(a2) + 2 * R(a1) * R(a3) - R(a3) * R(a3) + R(a1) * R(a4) - R(a3) * R(a4));
    const Rational y3 = f * R(a1 - a2 + a3) * R(a1 + a2 + 4 * a3 + 2 * a4);
    const Rational y4 =
        -f * (R(a1) * R(a1) + 4 * R(a1) * R(a3) - R(a2) * R(a3) + R(a1) * R(a4) - R(a3) * R(a4));
    const Rational y5 =
        f * (R(a1) * R(a2) - 5 * R(a1) * R(a3) + R(a2) * R(a4) + R(a3) * R(a4));
    const Rational y6 = 6 * f * R(a3) * R(a1 - a3 + a4);
    out.terms = merged({
        Term{y1, DegreeSequence{0, a1, a1 + a2, a1 + a2 + a3, top}},
        Term{y2, DegreeSequence{0, a2, a1 + a2, a1 + a2 + a3, top}},
        Term{y3, DegreeSequence{0, a2, a1 + a3, a1 + a2 + a3, top}},
        Term{y4, DegreeSequence{0, a3, a1 + a3, a1 + a2 + a3, top}},
        Term{y5, DegreeSequence{0, a3, a2 + a3, a1 + a2 + a3, top}},
        Term{y6, DegreeSequence{0, a3, a2 + a3, a1 + a2 + a4, top}},
        Term{y6, DegreeSequence{0, a3, a1 + a4, a1 + a2 + a4, top}},
        Term{y5, DegreeSequence{0, a4, a1 + a4, a1 + a2 + a4, top}},
        Term{y4, DegreeSequence{0, a4, a2 + a4, a1 + a2 + a4, top}},
        Term{y3, DegreeSequence{0, a4, a2 + a4, a1 + a3 + a4, top}},
        Term{y2, DegreeSequence{0, a4, a3 + a4, a1 + a3 + a4, top}},
        Term{y1, DegreeSequence{0, a4, a3 + a4, a2 + a3 + a4, top}},
    });
    return out;
}

}  // namespace bsdecomp
