#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "unitgroups/serialize.hpp"

namespace unitgroups {

/// Malformed scenario document (missing fields, unknown kind, bad schema).
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One scenario file: an identifier, a dispatch kind, kind-specific
/// parameters and an optional expected-result document compared field by
/// field against the computed report.
struct Scenario {
    std::string id;
    std::string kind;
    json params;
    std::optional<json> expect;
};

Scenario scenario_from_json(const json& doc);

struct ScenarioOutcome {
    json report;       ///< deterministic: fixed key order, canonical numbers
    bool pass = true;  ///< expect absent or fully matched
    std::vector<std::string> mismatches;
    double wall_seconds = 0.0;
};

/// Exit-code contract: 0 success, 1 expectation mismatch, 2 schema
/// violation, 3 computation error.  The latter two surface as exceptions
/// (SchemaError, anything else); this maps an outcome of a completed run.
int exit_code(const ScenarioOutcome& o);

ScenarioOutcome run_scenario(const Scenario& s);

/// Every field present in `expect` must match `actual`; extra computed
/// fields are fine.  Integer-like strings and numbers compare by value.
bool json_subset_match(const json& expect, const json& actual, const std::string& path,
                       std::vector<std::string>& mismatches);

struct SuiteEntry {
    std::string file;
    std::string id;
    std::string status; ///< pass | fail | schema-error | error
    std::string detail;
    double wall_seconds = 0.0;
};

struct SuiteSummary {
    std::vector<SuiteEntry> entries;
    std::size_t passed = 0;
    std::size_t failed = 0;
    int exit_code = 0; ///< nonzero iff any failure
};

/// Runs every *.json scenario under `dir` in filename order.
SuiteSummary run_suite(const std::string& dir);

} // namespace unitgroups
