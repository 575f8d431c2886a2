#pragma once

#include <compare>
#include <initializer_list>
#include <vector>

#include "bsdecomp/rational.hpp"

namespace bsdecomp {

/// Strictly increasing integer sequence (d_0, ..., d_n). One degree per
/// column of a pure diagram. Construction validates strict increase.
class DegreeSequence {
public:
    explicit DegreeSequence(std::vector<Int> values);
    DegreeSequence(std::initializer_list<Int> values);

    const std::vector<Int>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    Int operator[](std::size_t k) const { return values_[k]; }
    Int front() const { return values_.front(); }
    Int back() const { return values_.back(); }

    bool operator==(const DegreeSequence&) const = default;
    auto operator<=>(const DegreeSequence&) const = default;

private:
    std::vector<Int> values_;
};

// Reflection e -> (e_n - e_n, e_n - e_{n-1}, ..., e_n - e_0). Requires
// e_0 = 0 (FirstEntryNonzero otherwise); an involution on such sequences.
DegreeSequence check_dual(const DegreeSequence& e);

// Appends `next` to `d`; NotStrictlyIncreasing when next <= d.back().
DegreeSequence concat(const DegreeSequence& d, Int next);

// Componentwise partial order. LengthMismatch when sizes differ.
bool leq(const DegreeSequence& lhs, const DegreeSequence& rhs);

// True when consecutive elements of `seqs` are weakly increasing under leq.
bool is_chain(const std::vector<DegreeSequence>& seqs);

}  // namespace bsdecomp
