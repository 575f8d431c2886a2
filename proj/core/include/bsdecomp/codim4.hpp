#pragma once

#include <vector>

#include "bsdecomp/decompose.hpp"
#include "bsdecomp/koszul.hpp"

namespace bsdecomp {

/// Equality pattern of a codimension-three degree triple.
enum class DegeneracyCase {
    Distinct,     // a1 < a2 < a3
    MiddleEqual,  // a1 < a2 = a3
    FirstEqual,   // a1 = a2 < a3
    AllEqual,     // a1 = a2 = a3
};

DegeneracyCase classify_triple(Int a1, Int a2, Int a3);
const char* degeneracy_name(DegeneracyCase degeneracy);

/// A decomposition evaluated from closed-form coefficient formulas.
/// Coincident sequences are merged into one term. `certified` records
/// whether the last degree clears the case's applicability bound; the
/// terms are returned either way.
struct ClosedFormDecomposition {
    DegeneracyCase degeneracy;
    int case_number;  // 0: codim-3 form; 1 or 2: codim-4 structure cases
    std::vector<Term> terms;
    Rational applicability_bound;
    bool certified;
};

/// Closed-form greedy decomposition of beta(a1,a2,a3), split by equality
/// pattern. Exact for every valid triple (bound 0, always certified).
ClosedFormDecomposition codim3_closed(Int a1, Int a2, Int a3);

struct RemainderReport {
    DegeneracyCase degeneracy;
    std::vector<Rational> values;
};

/// Closed-form remainders of a codim-3 base relative to a fourth degree;
/// matches remainders({a1,a2,a3}).
RemainderReport codim4_remainders(Int a1, Int a2, Int a3);

struct RatioReport {
    DegeneracyCase degeneracy;
    std::vector<Rational> ratios;  // r_s / z_s
    Rational bound;                // max{a1+a2+a3, ratios...}
};

RatioReport codim4_ratios(Int a1, Int a2, Int a3);

/// Closed-form decomposition of beta(a1,a2,a3,a4): the 12-term Case 1 form
/// (a1 < a2 <= a3, or all equal) or the 8-term Case 2 form (a1 = a2 < a3).
/// Certified when a4 > bound (Case 1) resp. a4 >= bound (Case 2); then it
/// equals the greedy decomposition of the Koszul diagram.
ClosedFormDecomposition codim4_closed(Int a1, Int a2, Int a3, Int a4);

}  // namespace bsdecomp
