#include "bsdecomp/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bsdecomp/errors.hpp"

namespace bsdecomp::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Int> parse_integers(const std::vector<std::string>& tokens) {
    std::vector<Int> values;
    for (const std::string& token : tokens) {
        std::stringstream splitter(token);
        std::string piece;
        while (std::getline(splitter, piece, ',')) {
            if (piece.empty()) continue;
            try {
                std::size_t used = 0;
                long long v = std::stoll(piece, &used);
                if (used != piece.size()) throw std::invalid_argument(piece);
                values.push_back(v);
            } catch (const std::exception&) {
                throw UsageError("not an integer: '" + piece + "'");
            }
        }
    }
    if (values.empty()) throw UsageError("expected at least one degree");
    return values;
}

DegreeTuple tuple_from(const std::vector<Int>& raw, std::ostream& err) {
    DegreeTuple tuple = normalize(raw);
    if (tuple.degrees() != raw) {
        err << "note: degrees sorted to ";
        for (int k = 0; k < tuple.codim(); ++k) err << (k ? "," : "") << tuple[k];
        err << "\n";
    }
    return tuple;
}

std::string join_rationals(const std::vector<Rational>& values) {
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) out += ", ";
        out += to_string(values[k]);
    }
    return out;
}

const char* yesno(bool flag) { return flag ? "yes" : "no"; }

void print_recursive_text(const RecursiveReport& report, std::ostream& out) {
    out << "beta(";
    for (int k = 0; k < report.base.codim(); ++k) out << (k ? "," : "") << report.base[k];
    out << " + " << report.a_next << "): " << report.terms.size()
        << " terms, elimination size " << report.elimination_size;
    if (report.phase2_steps == 0) {
        out << ", phase 2 skipped";
    }
    out << "\n";
    for (std::size_t s = 0; s < report.terms.size(); ++s) {
        const RecursiveTerm& term = report.terms[s];
        out << "  s=" << s + 1 << "  phase " << term.phase << "  "
            << render_term(Term{term.coefficient, term.sequence}) << "\n";
    }
    out << "remainders: " << join_rationals(report.remainders) << "\n";
    out << "stability_bound = " << to_string(report.stability_bound) << "\n";
    out << "flags: chain=" << yesno(report.is_chain)
        << " all_positive=" << yesno(report.all_positive)
        << " symmetric=" << yesno(report.symmetric)
        << " agrees_with_standard=" << yesno(report.agrees_with_standard)
        << " compatible_order=" << yesno(report.compatible_order)
        << " error_zero=" << yesno(report.error_diagram.is_zero()) << "\n";
}

json violation_json(const SweepViolation& violation) {
    json base = json::array();
    for (Int d : violation.base) base.push_back(d);
    return json{{"type", "counterexample"},
                {"base", std::move(base)},
                {"a_next", violation.a_next},
                {"kind", violation.kind},
                {"detail", violation.detail}};
}

json summary_json(const SweepSummary& summary) {
    return json{{"type", "sweep_summary"},
                {"codim", summary.config.codim},
                {"max_degree", summary.config.max_degree},
                {"next_range", summary.config.next_range},
                {"bases", summary.bases},
                {"runs", summary.runs},
                {"completed", summary.completed},
                {"degenerate", summary.degenerate},
                {"mass_elimination", summary.mass_elimination},
                {"counterexamples", summary.violations.size()}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Boij-Soderberg decompositions of complete-intersection Betti tables"};
    app.require_subcommand(1);

    std::vector<std::string> tuple_tokens;
    bool as_json = false;
    bool with_elim_table = false;

    auto* betti = app.add_subcommand("betti", "Print the Betti table of a degree tuple");
    betti->add_option("degrees", tuple_tokens, "generator degrees, e.g. 2,3,4")->required();

    auto* dec = app.add_subcommand("decompose", "Greedy pure-diagram decomposition");
    dec->add_option("degrees", tuple_tokens, "generator degrees")->required();
    dec->add_flag("--json", as_json, "emit a JSON document");
    dec->add_flag("--elim-table", with_elim_table, "also print the elimination table");

    auto* recursive = app.add_subcommand(
        "recursive", "Recursive decomposition of beta(A + B) from the base tuple A");
    recursive->add_option("degrees", tuple_tokens, "base degrees then the extension degree")
        ->required();
    recursive->add_flag("--json", as_json, "emit a JSON document");

    auto* bound = app.add_subcommand("bound", "Remainders, ratios, and the stability bound");
    bound->add_option("degrees", tuple_tokens, "base degrees")->required();

    auto* codim4 = app.add_subcommand("codim4", "Codimension-four closed form + engine check");
    codim4->add_option("degrees", tuple_tokens, "a1 a2 a3 a4")->required()->expected(1, 4);
    codim4->add_flag("--json", as_json, "emit a JSON document");

    auto* conjecture =
        app.add_subcommand("conjecture", "Compare phase-2 coefficients with the closed form");
    conjecture->add_option("degrees", tuple_tokens, "base degrees then the extension degree")
        ->required();

    SweepConfig sweep_config;
    std::string sweep_out_path;
    auto* sweep = app.add_subcommand("sweep", "Exhaustive property verification over all tuples");
    sweep->add_option("--codim", sweep_config.codim, "base tuple length")->required();
    sweep->add_option("--max-degree", sweep_config.max_degree, "largest base degree")->required();
    sweep->add_option("--next-range", sweep_config.next_range,
                      "extension degrees run from a_c to a + this range (default 5)");
    if (const char* env_jobs = std::getenv("BS_DECOMP_JOBS")) {
        sweep_config.jobs = std::atoi(env_jobs);
    }
    sweep->add_option("--jobs,-j", sweep_config.jobs,
                      "worker threads (default: BS_DECOMP_JOBS or hardware)");
    sweep->add_option("--out", sweep_out_path, "write counterexamples and summary as JSON lines");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (betti->parsed()) {
            const DegreeTuple tuple = tuple_from(parse_integers(tuple_tokens), err);
            out << render_diagram(betti_ci(tuple));
            return 0;
        }

        if (dec->parsed()) {
            const DegreeTuple tuple = tuple_from(parse_integers(tuple_tokens), err);
            const Diagram diagram = betti_ci(tuple);
            const GreedyResult result = decompose(diagram);
            if (as_json) {
                out << envelope("decompose",
                                decomposition_payload(result.decomposition,
                                                      with_elim_table ? &result.record : nullptr))
                           .dump(2)
                    << "\n";
            } else {
                for (const Term& term : result.decomposition.terms) {
                    out << render_term(term) << "\n";
                }
                if (with_elim_table) {
                    out << "elimination table (rows = degree - column):\n"
                        << render_elimination_table(diagram, result.record);
                    out << "mass elimination: " << yesno(result.record.has_mass_elimination())
                        << "\n";
                }
            }
            return 0;
        }

        if (recursive->parsed() || conjecture->parsed()) {
            std::vector<Int> values = parse_integers(tuple_tokens);
            if (values.size() < 2) throw UsageError("expected base degrees plus one extension degree");
            const Int a_next = values.back();
            values.pop_back();
            const DegreeTuple base = tuple_from(values, err);
            if (recursive->parsed()) {
                const RecursiveReport report = new_algorithm(base, a_next);
                if (as_json) {
                    out << envelope("recursive", recursive_payload(report)).dump(2) << "\n";
                } else {
                    print_recursive_text(report, out);
                }
            } else {
                const ConjectureReport report = conjecture_phase2(base, a_next);
                out << "stability_bound = " << to_string(report.bound) << " (extension degree "
                    << a_next << (report.bound_met ? " above" : " NOT above") << " the bound)\n";
                for (const ConjectureRow& row : report.rows) {
                    out << "s=" << row.index << ": predicted " << to_string(row.predicted)
                        << ", engine " << to_string(row.actual) << ", "
                        << (row.equal ? "exact match" : "MISMATCH") << "\n";
                }
                if (report.rows.empty()) out << "no phase-2 coefficients (phase 2 skipped)\n";
                out << "verdict: " << (report.all_equal ? "holds" : "fails")
                    << (report.bound_met ? "" : " (outside hypothesis)") << "\n";
            }
            return 0;
        }

        if (bound->parsed()) {
            const DegreeTuple base = tuple_from(parse_integers(tuple_tokens), err);
            const std::vector<Rational> rs = remainders(base);
            const GreedyResult greedy = decompose(betti_ci(base));
            std::vector<Rational> ratios;
            for (std::size_t s = 0; s < rs.size(); ++s) {
                ratios.push_back(rs[s] / greedy.decomposition.terms[s].coefficient);
            }
            out << "remainders: " << join_rationals(rs) << "\n";
            out << "ratios: " << join_rationals(ratios) << "\n";
            out << "stability_bound = " << to_string(stability_bound(base)) << "\n";
            return 0;
        }

        if (codim4->parsed()) {
            std::vector<Int> values = parse_integers(tuple_tokens);
            if (values.size() != 4) throw UsageError("codim4 expects exactly four degrees");
            const DegreeTuple tuple = tuple_from(values, err);
            const ClosedFormDecomposition closed =
                codim4_closed(tuple[0], tuple[1], tuple[2], tuple[3]);
            const GreedyResult greedy = decompose(betti_ci(tuple));
            const RecursiveReport rec =
                new_algorithm(DegreeTuple{tuple[0], tuple[1], tuple[2]}, tuple[3]);
            const bool matches_greedy = canonical_terms(closed.terms) ==
                                        canonical_terms(greedy.decomposition.terms);
            const bool matches_recursive =
                canonical_terms(closed.terms) == canonical_terms(rec.plain_terms());
            if (as_json) {
                json payload = closed_form_payload(closed);
                payload["engine_check"] = json{{"matches_greedy", matches_greedy},
                                               {"matches_recursive", matches_recursive}};
                out << envelope("codim4", std::move(payload)).dump(2) << "\n";
            } else {
                out << "case " << closed.case_number << " (" << degeneracy_name(closed.degeneracy)
                    << "), bound = " << to_string(closed.applicability_bound) << ", a4 = "
                    << tuple[3] << (closed.certified ? ": certified" : ": NOT certified") << "\n";
                for (const Term& term : closed.terms) out << "  " << render_term(term) << "\n";
                out << "engine cross-check: greedy " << (matches_greedy ? "ok" : "MISMATCH")
                    << ", recursive " << (matches_recursive ? "ok" : "MISMATCH") << "\n";
            }
            if (closed.certified && (!matches_greedy || !matches_recursive)) {
                err << "error: InternalInconsistency: certified closed form disagrees with the engine\n";
                return 1;
            }
            return 0;
        }

        if (sweep->parsed()) {
            const SweepSummary summary = run_sweep(sweep_config);
            out << "sweep codim=" << summary.config.codim
                << " max_degree=" << summary.config.max_degree
                << " next_range=" << summary.config.next_range << "\n";
            out << "bases=" << summary.bases << " runs=" << summary.runs
                << " completed=" << summary.completed << " degenerate=" << summary.degenerate
                << " mass_elimination=" << summary.mass_elimination << "\n";
            out << "counterexamples=" << summary.violations.size() << "\n";
            for (const SweepViolation& violation : summary.violations) {
                out << violation_json(violation).dump() << "\n";
            }
            if (!sweep_out_path.empty()) {
                std::ofstream file(sweep_out_path);
                if (!file) throw UsageError("cannot open " + sweep_out_path);
                for (const SweepViolation& violation : summary.violations) {
                    file << violation_json(violation).dump() << "\n";
                }
                file << summary_json(summary).dump() << "\n";
            }
            return summary.violations.empty() ? 0 : 3;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.kind() << ": " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace bsdecomp::cli
