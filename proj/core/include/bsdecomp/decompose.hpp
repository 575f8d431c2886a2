#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bsdecomp/diagram.hpp"
#include "bsdecomp/degree_sequence.hpp"
#include "bsdecomp/pure_diagram.hpp"

namespace bsdecomp {

struct Term {
    Rational coefficient;
    DegreeSequence sequence;
    bool operator==(const Term&) const = default;
};

/// Ordered pure-diagram terms whose sum recomposes the source diagram
/// exactly. Greedy output carries strictly positive coefficients.
struct Decomposition {
    int columns = 0;
    std::vector<Term> terms;
    bool operator==(const Decomposition&) const = default;
};

/// Data kept for a step that zeroed a single position: the position, the
/// source diagram's original value there, and the corresponding entry of
/// the step's pure diagram.
struct SingletonStep {
    Position position;
    Rational eliminated_value;
    Rational pure_value;
};

/// Which greedy step first zeroes each position, plus the per-step sets.
struct EliminationRecord {
    std::map<Position, int> table;             // position -> 1-based step index
    std::vector<std::vector<Position>> order;  // order[k] = positions zeroed at step k+1
    std::vector<std::optional<SingletonStep>> singletons;  // set iff order[k] is a singleton

    int steps() const { return static_cast<int>(order.size()); }

    /// A non-final step zeroing two or more positions.
    bool has_mass_elimination() const;
};

struct GreedyResult {
    Decomposition decomposition;
    EliminationRecord record;
};

/// Greedy totally-ordered decomposition: repeatedly subtract the maximal
/// positive multiple of the pure diagram of the current minimal degree
/// sequence that keeps all entries nonnegative. The scale is the exact
/// minimum of the per-column ratios; every column attaining it is zeroed
/// in the same step. Throws NegativeEntry on invalid input and EmptyColumn
/// when the diagram leaves the decomposable regime.
GreedyResult decompose(const Diagram& d);

/// Per-step position sets of decompose(d).
std::vector<std::vector<Position>> elimination_order(const Diagram& d);

bool has_mass_elimination(const Diagram& d);

/// Sum of coefficient * pure_diagram(sequence); round-trip oracle for
/// decompose.
Diagram recompose(const Decomposition& dec);

/// Merges terms with equal sequences, summing coefficients into the first
/// occurrence. Repeats arise when degenerate degrees or small extension
/// degrees make distinct construction steps land on the same pure diagram;
/// only the merged coefficient is well defined then.
std::vector<Term> merge_coincident(const std::vector<Term>& terms);

/// merge_coincident, then zero-coefficient terms removed. Two
/// decompositions describe the same diagram combination iff their
/// canonical term lists are equal.
std::vector<Term> canonical_terms(const std::vector<Term>& terms);

}  // namespace bsdecomp
