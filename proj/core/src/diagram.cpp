#include "bsdecomp/diagram.hpp"

#include <optional>
#include <string>

#include "bsdecomp/errors.hpp"

namespace bsdecomp {
namespace {

const Rational kZero = 0;

std::string pos_text(int column, Int degree) {
    return "(" + std::to_string(column) + "," + std::to_string(degree) + ")";
}

}  // namespace

Diagram::Diagram(int columns) : columns_(columns) {
    if (columns < 1) throw ColumnOutOfRange("column count must be positive");
}

Diagram Diagram::from_entries(int columns,
                              const std::vector<std::tuple<int, Int, Rational>>& entries) {
    Diagram out(columns);
    for (const auto& [column, degree, value] : entries) {
        if (column < 0 || column >= columns) {
            throw ColumnOutOfRange("column " + std::to_string(column) + " outside [0," +
                                   std::to_string(columns) + ")");
        }
        Position pos{column, degree};
        if (out.entries_.count(pos)) {
            throw DuplicateEntry("duplicate entry at " + pos_text(column, degree));
        }
        if (value != 0) out.entries_.emplace(pos, value);
    }
    return out;
}

const Rational& Diagram::at(int column, Int degree) const {
    return at(Position{column, degree});
}

const Rational& Diagram::at(const Position& pos) const {
    auto it = entries_.find(pos);
    return it == entries_.end() ? kZero : it->second;
}

Diagram axpy(const Diagram& d, const Rational& scale, const Diagram& p) {
    if (d.columns() != p.columns()) {
        throw ColumnCountMismatch("column counts differ: " + std::to_string(d.columns()) +
                                  " vs " + std::to_string(p.columns()));
    }
    Diagram out = d;
    for (const auto& [pos, value] : p.entries()) {
        auto it = out.entries_.find(pos);
        if (it == out.entries_.end()) {
            Rational v = scale * value;
            if (v != 0) out.entries_.emplace(pos, std::move(v));
        } else {
            it->second += scale * value;
            if (it->second == 0) out.entries_.erase(it);
        }
    }
    return out;
}

Diagram dual(const Diagram& d) {
    const int n = d.columns() - 1;
    Diagram out(d.columns());
    for (const auto& [pos, value] : d.entries()) {
        out.entries_.emplace(Position{n - pos.column, -pos.degree}, value);
    }
    return out;
}

Diagram twist(const Diagram& d, Int shift) {
    Diagram out(d.columns());
    for (const auto& [pos, value] : d.entries()) {
        out.entries_.emplace(Position{pos.column, pos.degree - shift}, value);
    }
    return out;
}

std::vector<Rational> herzog_kuhl_residuals(const Diagram& d, int count) {
    std::vector<Rational> residuals(static_cast<std::size_t>(count) + 1, Rational(0));
    for (const auto& [pos, value] : d.entries()) {
        const int sign = pos.column % 2 == 0 ? 1 : -1;
        Integer power = 1;  // j^0 = 1, including j = 0
        for (int t = 0; t <= count; ++t) {
            residuals[t] += sign * value * Rational(power);
            power *= static_cast<long>(pos.degree);
        }
    }
    return residuals;
}

DegreeSequence min_degree_sequence(const Diagram& d) {
    std::vector<Int> mins;
    mins.reserve(d.columns());
    // Entries are ordered by (column, degree), so the first key of each
    // column is its least degree.
    auto it = d.entries().begin();
    for (int column = 0; column < d.columns(); ++column) {
        if (it == d.entries().end() || it->first.column != column) {
            throw EmptyColumn("column " + std::to_string(column) + " has no nonzero entry");
        }
        mins.push_back(it->first.degree);
        while (it != d.entries().end() && it->first.column == column) ++it;
    }
    return DegreeSequence(std::move(mins));
}

bool is_pure(const Diagram& d) {
    std::optional<int> last_column;
    for (const auto& [pos, value] : d.entries()) {
        if (last_column && *last_column == pos.column) return false;
        last_column = pos.column;
    }
    return true;
}

}  // namespace bsdecomp
