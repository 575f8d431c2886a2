#pragma once

#include <vector>

#include "bsdecomp/diagram.hpp"
#include "bsdecomp/rational.hpp"

namespace bsdecomp {

/// Nondecreasing positive generator degrees (a_1, ..., a_c) of a graded
/// complete intersection.
class DegreeTuple {
public:
    explicit DegreeTuple(std::vector<Int> degrees);
    DegreeTuple(std::initializer_list<Int> degrees);

    const std::vector<Int>& degrees() const { return degrees_; }
    int codim() const { return static_cast<int>(degrees_.size()); }
    Int operator[](std::size_t k) const { return degrees_[k]; }
    Int largest() const { return degrees_.back(); }
    Int total() const;  // a = sum a_k

    bool operator==(const DegreeTuple&) const = default;

private:
    std::vector<Int> degrees_;
};

/// Sorts raw degrees into a valid tuple. Throws EmptyTuple /
/// NonPositiveDegree.
DegreeTuple normalize(std::vector<Int> raw);

/// Tuple extended by one more generator degree (next >= largest).
DegreeTuple extend(const DegreeTuple& a, Int next);

struct CiInvariants {
    Int pdim;
    Int reg;
};

/// (pdim, reg) = (c, sum a_k - c).
CiInvariants ci_invariants(const DegreeTuple& a);

/// Betti diagram of the complete intersection with generator degrees `a`:
/// entry (i, j) counts the i-element index subsets of the tuple summing
/// to j. Computed by dynamic programming on the generating polynomial
/// prod_k (1 + x^{a_k} y), never by subset enumeration.
Diagram betti_ci(const DegreeTuple& a);

}  // namespace bsdecomp
