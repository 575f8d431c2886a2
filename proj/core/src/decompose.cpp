#include "bsdecomp/decompose.hpp"

#include <string>
#include <utility>

#include "bsdecomp/errors.hpp"

namespace bsdecomp {

bool EliminationRecord::has_mass_elimination() const {
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
        if (order[k].size() > 1) return true;
    }
    return false;
}

GreedyResult decompose(const Diagram& d) {
    if (d.is_zero()) throw EmptyColumn("cannot decompose the zero diagram");
    for (const auto& [pos, value] : d.entries()) {
        if (value < 0) {
            throw NegativeEntry("negative entry at column " + std::to_string(pos.column) +
                                ", degree " + std::to_string(pos.degree));
        }
    }

    GreedyResult result;
    result.decomposition.columns = d.columns();
    EliminationRecord& record = result.record;

    const std::size_t position_budget = d.entry_count();
    Diagram running = d;
    while (!running.is_zero()) {
        const DegreeSequence seq = min_degree_sequence(running);
        const Diagram pure = pure_diagram(seq);

        // Maximal q keeping all entries nonnegative: only the positions
        // (i, seq_i) shrink, so q is the least of their ratios.
        Rational scale;
        bool first = true;
        for (int i = 0; i < running.columns(); ++i) {
            Rational ratio = running.at(i, seq[i]) / pure.at(i, seq[i]);
            if (first || ratio < scale) scale = std::move(ratio);
            first = false;
        }

        Diagram next = axpy(running, -scale, pure);
        std::vector<Position> zeroed;
        for (int i = 0; i < running.columns(); ++i) {
            Position pos{i, seq[i]};
            if (next.at(pos) == 0) zeroed.push_back(pos);
            if (next.at(pos) < 0) throw InternalInconsistency("greedy step produced a negative entry");
        }
        if (zeroed.empty()) throw InternalInconsistency("greedy step zeroed no position");

        const int step = record.steps() + 1;
        for (const Position& pos : zeroed) record.table.emplace(pos, step);
        if (zeroed.size() == 1) {
            record.singletons.push_back(
                SingletonStep{zeroed[0], d.at(zeroed[0]), pure.at(zeroed[0])});
        } else {
            record.singletons.push_back(std::nullopt);
        }
        record.order.push_back(std::move(zeroed));
        result.decomposition.terms.push_back(Term{std::move(scale), seq});
        running = std::move(next);

        if (record.order.size() > position_budget) {
            throw InternalInconsistency("greedy step count exceeded the position count");
        }
    }
    return result;
}

std::vector<std::vector<Position>> elimination_order(const Diagram& d) {
    return decompose(d).record.order;
}

bool has_mass_elimination(const Diagram& d) {
    return decompose(d).record.has_mass_elimination();
}

Diagram recompose(const Decomposition& dec) {
    Diagram total(dec.columns);
    for (const Term& term : dec.terms) {
        total = axpy(total, term.coefficient, pure_diagram(term.sequence));
    }
    return total;
}

std::vector<Term> merge_coincident(const std::vector<Term>& terms) {
    std::vector<Term> merged;
    std::map<DegreeSequence, std::size_t> slot;
    for (const Term& term : terms) {
        auto [it, inserted] = slot.emplace(term.sequence, merged.size());
        if (inserted) {
            merged.push_back(term);
        } else {
            merged[it->second].coefficient += term.coefficient;
        }
    }
    return merged;
}

std::vector<Term> canonical_terms(const std::vector<Term>& terms) {
    std::vector<Term> canonical;
    for (const Term& term : merge_coincident(terms)) {
        if (term.coefficient != 0) canonical.push_back(term);
    }
    return canonical;
}

}  // namespace bsdecomp
