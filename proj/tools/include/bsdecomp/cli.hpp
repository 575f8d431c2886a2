#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "bsdecomp/codim4.hpp"
#include "bsdecomp/decompose.hpp"
#include "bsdecomp/recursive.hpp"
#include "bsdecomp/sweep.hpp"

namespace bsdecomp::cli {

/// Exit codes: 0 success, 1 computation error, 2 usage error, 3 sweep
/// found counterexamples.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// --- document serialization -------------------------------------------------
//
// Every --json response is an envelope
//   {"schema_version": "1", "command": "<subcommand>", "payload": {...}}
// with rationals as "n" or "n/d" strings and degree sequences as integer
// arrays. Parsing a serialized payload reproduces the exact rationals.

extern const char* const kSchemaVersion;

nlohmann::json envelope(const std::string& command, nlohmann::json payload);

nlohmann::json diagram_payload(const Diagram& diagram);
nlohmann::json decomposition_payload(const Decomposition& decomposition,
                                     const EliminationRecord* record = nullptr);
nlohmann::json recursive_payload(const RecursiveReport& report);
nlohmann::json closed_form_payload(const ClosedFormDecomposition& closed);

Diagram parse_diagram_payload(const nlohmann::json& payload);
Decomposition parse_decomposition_payload(const nlohmann::json& payload);

// --- text rendering ----------------------------------------------------------

/// Betti table in conventional layout: rows indexed by degree - column,
/// columns 0..n, "." for zero entries.
std::string render_diagram(const Diagram& diagram);

/// Elimination table in the same display coordinates, step indices as
/// entries.
std::string render_elimination_table(const Diagram& diagram, const EliminationRecord& record);

std::string render_term(const Term& term);

}  // namespace bsdecomp::cli
