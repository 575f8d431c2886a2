#include "bsdecomp/pure_diagram.hpp"

#include <cstdlib>

namespace bsdecomp {

Diagram pure_diagram(const DegreeSequence& d) {
    const std::size_t n = d.size();
    std::vector<std::tuple<int, Int, Rational>> entries;
    entries.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Integer denom = 1;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == i) continue;
            denom *= static_cast<long>(std::abs(d[i] - d[k]));
        }
        Rational value(Integer(1), denom);
        value.canonicalize();
        entries.emplace_back(static_cast<int>(i), d[i], std::move(value));
    }
    return Diagram::from_entries(static_cast<int>(n), entries);
}

}  // namespace bsdecomp
