#include "bsdecomp/cli.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bsdecomp::cli {
namespace {

// Shared grid renderer: rows are display rows (degree - column), one cell
// per column, "." for missing cells.
std::string render_grid(int columns, const std::map<std::pair<Int, int>, std::string>& cells) {
    if (cells.empty()) return "(zero diagram)\n";
    Int row_min = cells.begin()->first.first;
    Int row_max = row_min;
    for (const auto& [key, text] : cells) {
        row_min = std::min(row_min, key.first);
        row_max = std::max(row_max, key.first);
    }

    std::vector<std::size_t> widths(columns, 1);
    for (int i = 0; i < columns; ++i) {
        widths[i] = std::max(widths[i], std::to_string(i).size());
    }
    for (const auto& [key, text] : cells) {
        widths[key.second] = std::max(widths[key.second], text.size());
    }
    std::size_t label_width = std::max(std::to_string(row_min).size(),
                                       std::to_string(row_max).size());

    std::ostringstream out;
    out << std::string(label_width + 2, ' ');
    for (int i = 0; i < columns; ++i) {
        std::string head = std::to_string(i);
        out << "  " << std::string(widths[i] - head.size(), ' ') << head;
    }
    out << '\n';
    for (Int row = row_min; row <= row_max; ++row) {
        std::string label = std::to_string(row);
        out << std::string(label_width - label.size(), ' ') << label << ": ";
        for (int i = 0; i < columns; ++i) {
            auto it = cells.find({row, i});
            std::string text = it == cells.end() ? "." : it->second;
            out << "  " << std::string(widths[i] - text.size(), ' ') << text;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace

std::string render_diagram(const Diagram& diagram) {
    std::map<std::pair<Int, int>, std::string> cells;
    for (const auto& [pos, value] : diagram.entries()) {
        cells[{pos.degree - pos.column, pos.column}] = to_string(value);
    }
    return render_grid(diagram.columns(), cells);
}

std::string render_elimination_table(const Diagram& diagram, const EliminationRecord& record) {
    std::map<std::pair<Int, int>, std::string> cells;
    for (const auto& [pos, step] : record.table) {
        cells[{pos.degree - pos.column, pos.column}] = std::to_string(step);
    }
    return render_grid(diagram.columns(), cells);
}

std::string render_term(const Term& term) {
    std::ostringstream out;
    out << to_string(term.coefficient) << " * pi(";
    for (std::size_t k = 0; k < term.sequence.size(); ++k) {
        if (k) out << ',';
        out << term.sequence[k];
    }
    out << ')';
    return out.str();
}

}  // namespace bsdecomp::cli
