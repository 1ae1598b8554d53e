#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pincalc/decide.hpp"

namespace pincalc {

// The JSON-visible slice of a decision report. Field names are stable and
// the schema evolves additively only (schema_version 1).
struct ReportJson {
    int schema_version = 1;
    std::string expression;
    int dimension = 0;
    bool orientable = false;
    bool spin = false;
    bool pin_plus = false;
    bool pin_minus = false;
    bool pin_c = false;
    std::string lipschitz_status;  // yes_with_witness | no_witness_found | not_applicable
    std::optional<std::string> lipschitz_witness;       // on yes_with_witness
    std::optional<std::string> lipschitz_search_scope;  // on no_witness_found
    std::vector<std::string> trace;

    bool operator==(const ReportJson&) const = default;
};

ReportJson to_report_json(const DecisionReport& r);
std::string render_json(const ReportJson& r);
ReportJson parse_report_json(const std::string& text);  // throws Error when malformed

std::string render_text(const DecisionReport& r, bool color);

// `classes` command: SW classes and lift-subspace bases through max_degree.
std::string classes_text(const ManifoldDescriptor& m, int max_degree);
std::string classes_json(const ManifoldDescriptor& m, int max_degree);

// `wu` command: Wu classes plus the Wu-vs-Whitney cross-check.
std::string wu_text(const ManifoldDescriptor& m);
std::string wu_json(const ManifoldDescriptor& m);

// Versioned, human-readable ground-data document for one catalog manifold
// (generators, bases, multiplication, Sq table, SW class, homology, lifts,
// provenance). catalog_format_version 1.
std::string catalog_document(const ManifoldDescriptor& m);

}  // namespace pincalc
