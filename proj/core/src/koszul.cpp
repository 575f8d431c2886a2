#include "bsdecomp/koszul.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "bsdecomp/errors.hpp"

namespace bsdecomp {

DegreeTuple::DegreeTuple(std::vector<Int> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty()) throw EmptyTuple("degree tuple must be nonempty");
    for (std::size_t k = 0; k < degrees_.size(); ++k) {
        if (degrees_[k] < 1) {
            throw NonPositiveDegree("degree " + std::to_string(degrees_[k]) + " is not positive");
        }
        if (k > 0 && degrees_[k - 1] > degrees_[k]) {
            throw NotStrictlyIncreasing("degrees must be nondecreasing; use normalize()");
        }
    }
}

DegreeTuple::DegreeTuple(std::initializer_list<Int> degrees)
    : DegreeTuple(std::vector<Int>(degrees)) {}

Int DegreeTuple::total() const {
    return std::accumulate(degrees_.begin(), degrees_.end(), Int{0});
}

DegreeTuple normalize(std::vector<Int> raw) {
    if (raw.empty()) throw EmptyTuple("degree tuple must be nonempty");
    for (Int d : raw) {
        if (d < 1) throw NonPositiveDegree("degree " + std::to_string(d) + " is not positive");
    }
    std::sort(raw.begin(), raw.end());
    return DegreeTuple(std::move(raw));
}

DegreeTuple extend(const DegreeTuple& a, Int next) {
    std::vector<Int> degrees = a.degrees();
    degrees.push_back(next);
    return DegreeTuple(std::move(degrees));
}

CiInvariants ci_invariants(const DegreeTuple& a) {
    return CiInvariants{a.codim(), a.total() - a.codim()};
}

Diagram betti_ci(const DegreeTuple& a) {
    // counts[{i, j}] = number of i-element index subsets summing to j.
    std::map<std::pair<int, Int>, Integer> counts;
    counts[{0, 0}] = 1;
    for (Int degree : a.degrees()) {
        std::map<std::pair<int, Int>, Integer> next = counts;
        for (const auto& [key, count] : counts) {
            next[{key.first + 1, key.second + degree}] += count;
        }
        counts = std::move(next);
    }
    std::vector<std::tuple<int, Int, Rational>> entries;
    entries.reserve(counts.size());
    for (const auto& [key, count] : counts) {
        entries.emplace_back(key.first, key.second, Rational(count));
    }
    return Diagram::from_entries(a.codim() + 1, entries);
}

}  // namespace bsdecomp
