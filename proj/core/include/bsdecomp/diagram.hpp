#pragma once

#include <compare>
#include <map>
#include <tuple>
#include <vector>

#include "bsdecomp/degree_sequence.hpp"
#include "bsdecomp/rational.hpp"

namespace bsdecomp {

/// Position of a Betti number: homological column i, internal degree j.
/// The paper-style display row is degree - column; conversion happens in
/// the rendering layer only.
struct Position {
    int column;
    Int degree;
    auto operator<=>(const Position&) const = default;
};

/// Sparse table of exact rationals indexed by (column, degree).
///
/// Canonical form: no stored value is zero, and every stored column lies in
/// [0, columns). The column count is explicit so zero diagrams and duals
/// are well defined. Values are immutable after construction; all
/// operations below are pure functions returning fresh diagrams.
class Diagram {
public:
    using EntryMap = std::map<Position, Rational>;

    explicit Diagram(int columns);

    /// Builds a diagram from (column, degree, value) triples. Zero values
    /// are dropped. Throws ColumnOutOfRange / DuplicateEntry.
    static Diagram from_entries(int columns,
                                const std::vector<std::tuple<int, Int, Rational>>& entries);

    int columns() const { return columns_; }
    const EntryMap& entries() const { return entries_; }
    std::size_t entry_count() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    /// Value at (column, degree); exact zero when no entry is stored.
    const Rational& at(int column, Int degree) const;
    const Rational& at(const Position& pos) const;

    bool operator==(const Diagram&) const = default;

private:
    friend Diagram axpy(const Diagram&, const Rational&, const Diagram&);
    friend Diagram dual(const Diagram&);
    friend Diagram twist(const Diagram&, Int);

    int columns_;
    EntryMap entries_;
};

/// Entrywise d + scale * p. Throws ColumnCountMismatch.
Diagram axpy(const Diagram& d, const Rational& scale, const Diagram& p);

/// (dual D)_{i,j} = D_{n-i,-j} where n+1 is the column count. Involution.
Diagram dual(const Diagram& d);

/// (twist D)_{i,j} = D_{i,shift+j}; twist(twist(D,r),-r) = D.
Diagram twist(const Diagram& d, Int shift);

/// Alternating power sums sum_{i,j} (-1)^i j^t d_{i,j} for t = 0..count,
/// with 0^0 = 1. A diagram of a finite-length module of codimension c has
/// vanishing sums for every t < c.
std::vector<Rational> herzog_kuhl_residuals(const Diagram& d, int count);

/// Sequence of least nonzero degrees per column. Throws EmptyColumn when a
/// column has no entry and NotStrictlyIncreasing when the minima fail to
/// form a degree sequence.
DegreeSequence min_degree_sequence(const Diagram& d);

/// True iff every column carries at most one nonzero entry.
bool is_pure(const Diagram& d);

}  // namespace bsdecomp
