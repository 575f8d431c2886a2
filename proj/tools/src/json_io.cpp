#include "bsdecomp/cli.hpp"

#include "bsdecomp/errors.hpp"

namespace bsdecomp::cli {

using nlohmann::json;

const char* const kSchemaVersion = "1";

namespace {

json sequence_json(const DegreeSequence& seq) {
    json out = json::array();
    for (Int v : seq.values()) out.push_back(v);
    return out;
}

json position_json(const Position& pos) {
    return json{{"column", pos.column}, {"degree", pos.degree}};
}

json terms_json(const std::vector<Term>& terms) {
    json out = json::array();
    for (const Term& term : terms) {
        out.push_back(json{{"coefficient", to_string(term.coefficient)},
                           {"degree_sequence", sequence_json(term.sequence)}});
    }
    return out;
}

}  // namespace

json envelope(const std::string& command, json payload) {
    return json{{"schema_version", kSchemaVersion},
                {"command", command},
                {"payload", std::move(payload)}};
}

json diagram_payload(const Diagram& diagram) {
    json entries = json::array();
    for (const auto& [pos, value] : diagram.entries()) {
        entries.push_back(json{{"column", pos.column},
                               {"degree", pos.degree},
                               {"value", to_string(value)}});
    }
    return json{{"type", "diagram"},
                {"coords", "column-degree"},
                {"columns", diagram.columns()},
                {"entries", std::move(entries)}};
}

json decomposition_payload(const Decomposition& decomposition, const EliminationRecord* record) {
    json out{{"type", "decomposition"},
             {"columns", decomposition.columns},
             {"terms", terms_json(decomposition.terms)}};
    if (record) {
        json order = json::array();
        for (const auto& step : record->order) {
            json positions = json::array();
            for (const Position& pos : step) positions.push_back(position_json(pos));
            order.push_back(std::move(positions));
        }
        json table = json::array();
        for (const auto& [pos, step] : record->table) {
            table.push_back(json{{"column", pos.column}, {"degree", pos.degree}, {"step", step}});
        }
        out["elimination"] = json{{"coords", "column-degree"},
                                  {"steps", record->steps()},
                                  {"mass_elimination", record->has_mass_elimination()},
                                  {"order", std::move(order)},
                                  {"table", std::move(table)}};
    }
    return out;
}

json recursive_payload(const RecursiveReport& report) {
    json terms = json::array();
    for (std::size_t s = 0; s < report.terms.size(); ++s) {
        const RecursiveTerm& term = report.terms[s];
        terms.push_back(json{{"index", s + 1},
                             {"phase", term.phase},
                             {"coefficient", to_string(term.coefficient)},
                             {"degree_sequence", sequence_json(term.sequence)},
                             {"target", position_json(term.target)}});
    }
    json remainders = json::array();
    for (const Rational& r : report.remainders) remainders.push_back(to_string(r));
    json base = json::array();
    for (Int d : report.base.degrees()) base.push_back(d);
    return json{{"type", "recursive_report"},
                {"base", std::move(base)},
                {"a_next", report.a_next},
                {"elimination_size", report.elimination_size},
                {"phase2_steps", report.phase2_steps},
                {"term_count", report.terms.size()},
                {"terms", std::move(terms)},
                {"remainders", std::move(remainders)},
                {"stability_bound", to_string(report.stability_bound)},
                {"flags", json{{"is_chain", report.is_chain},
                               {"all_positive", report.all_positive},
                               {"has_zero_coefficient", report.has_zero_coefficient},
                               {"symmetric", report.symmetric},
                               {"agrees_with_standard", report.agrees_with_standard},
                               {"compatible_order", report.compatible_order},
                               {"error_zero", report.error_diagram.is_zero()}}}};
}

json closed_form_payload(const ClosedFormDecomposition& closed) {
    return json{{"type", "closed_form"},
                {"degeneracy", degeneracy_name(closed.degeneracy)},
                {"case", closed.case_number},
                {"applicability_bound", to_string(closed.applicability_bound)},
                {"certified", closed.certified},
                {"terms", terms_json(closed.terms)}};
}

Diagram parse_diagram_payload(const json& payload) {
    std::vector<std::tuple<int, Int, Rational>> entries;
    for (const json& entry : payload.at("entries")) {
        entries.emplace_back(entry.at("column").get<int>(), entry.at("degree").get<Int>(),
                             parse_rational(entry.at("value").get<std::string>()));
    }
    return Diagram::from_entries(payload.at("columns").get<int>(), entries);
}

Decomposition parse_decomposition_payload(const json& payload) {
    Decomposition out;
    out.columns = payload.at("columns").get<int>();
    for (const json& term : payload.at("terms")) {
        std::vector<Int> values;
        for (const json& v : term.at("degree_sequence")) values.push_back(v.get<Int>());
        out.terms.push_back(Term{parse_rational(term.at("coefficient").get<std::string>()),
                                 DegreeSequence(std::move(values))});
    }
    return out;
}

}  // namespace bsdecomp::cli
