#include "bsdecomp/degree_sequence.hpp"

#include <sstream>

#include "bsdecomp/errors.hpp"

namespace bsdecomp {
namespace {

std::string render(const std::vector<Int>& values) {
    std::ostringstream out;
    out << '(';
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) out << ',';
        out << values[k];
    }
    out << ')';
    return out.str();
}

}  // namespace

DegreeSequence::DegreeSequence(std::vector<Int> values) : values_(std::move(values)) {
    if (values_.empty()) throw NotStrictlyIncreasing("empty degree sequence");
    for (std::size_t k = 0; k + 1 < values_.size(); ++k) {
        if (values_[k] >= values_[k + 1]) {
            throw NotStrictlyIncreasing("not strictly increasing: " + render(values_));
        }
    }
}

DegreeSequence::DegreeSequence(std::initializer_list<Int> values)
    : DegreeSequence(std::vector<Int>(values)) {}

DegreeSequence check_dual(const DegreeSequence& e) {
    if (e.front() != 0) {
        throw FirstEntryNonzero("check dual requires a sequence starting at 0, got " +
                                render(e.values()));
    }
    const Int last = e.back();
    std::vector<Int> out(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) {
        out[k] = last - e[e.size() - 1 - k];
    }
    return DegreeSequence(std::move(out));
}

DegreeSequence concat(const DegreeSequence& d, Int next) {
    std::vector<Int> out = d.values();
    out.push_back(next);
    return DegreeSequence(std::move(out));
}

bool leq(const DegreeSequence& lhs, const DegreeSequence& rhs) {
    if (lhs.size() != rhs.size()) {
        throw LengthMismatch("cannot compare sequences of lengths " +
                             std::to_string(lhs.size()) + " and " + std::to_string(rhs.size()));
    }
    for (std::size_t k = 0; k < lhs.size(); ++k) {
        if (lhs[k] > rhs[k]) return false;
    }
    return true;
}

bool is_chain(const std::vector<DegreeSequence>& seqs) {
    for (std::size_t k = 0; k + 1 < seqs.size(); ++k) {
        if (!leq(seqs[k], seqs[k + 1])) return false;
    }
    return true;
}

}  // namespace bsdecomp
