// Command line front end: computes normal forms, cohomology tables, boundary
// presentations, norms and Pell solutions from JSON documents or expression
// arguments, and runs scenario files with expected-result checking.
//
// Exit codes: 0 success, 1 expectation mismatch, 2 malformed input,
// 3 computation error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "unitgroups/scenario.hpp"

using unitgroups::json;
using unitgroups::Scenario;
using unitgroups::ScenarioOutcome;
using unitgroups::SchemaError;

namespace {

json read_json_input(const std::string& path) {
    try {
        if (path == "-") return json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw SchemaError("cannot open '" + path + "'");
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
}

std::optional<json> read_expect(const std::string& path) {
    if (path.empty()) return std::nullopt;
    return read_json_input(path);
}

void print_human(const ScenarioOutcome& o) {
    const json& rep = o.report;
    std::cout << rep.at("id").get<std::string>() << " [" << rep.at("kind").get<std::string>()
              << "]\n";
    std::cout << rep.at("results").dump(2) << "\n";
    if (rep.contains("pass"))
        std::cout << (o.pass ? "expect: pass" : "expect: FAIL") << "\n";
    if (!o.pass)
        for (const auto& m : o.mismatches) std::cout << "  mismatch " << m << "\n";
    std::cout << "wall time: " << o.wall_seconds << " s\n";
}

int finish(const ScenarioOutcome& o, bool as_json) {
    if (as_json)
        std::cout << o.report.dump(2) << "\n";
    else
        print_human(o);
    return unitgroups::exit_code(o);
}

int run_one(const Scenario& s, bool as_json) { return finish(unitgroups::run_scenario(s), as_json); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"unit groups of affine varieties: exact lattice, cohomology and "
                 "covering-ring computations"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit the deterministic JSON report");
    unsigned long seed = 0;
    app.add_option("--seed", seed, "seed for randomized scenario kinds (reserved)");

    std::string input, expect_path;
    unsigned long bound = 20;

    auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of a matrix document");
    snf_cmd->add_option("input", input, "matrix JSON file or '-' for stdin")->required();
    snf_cmd->add_option("--expect", expect_path, "expected-result JSON file");

    auto* coh_cmd = app.add_subcommand("cohomology", "cohomology table of a module document");
    coh_cmd->add_option("input", input, "module JSON file or '-'")->required();
    coh_cmd->add_option("--expect", expect_path, "expected-result JSON file");

    auto* nag_cmd = app.add_subcommand("nagata", "unit lattice and class data of a boundary "
                                                 "presentation document");
    nag_cmd->add_option("input", input, "presentation JSON file or '-'")->required();
    nag_cmd->add_option("--expect", expect_path, "expected-result JSON file");

    std::string pell_f, pell_var = "x";
    auto* pell_cmd = app.add_subcommand("pell", "solve a^2 - f b^2 = c by continued fractions");
    pell_cmd->add_option("f", pell_f, "univariate polynomial expression, e.g. \"x^4+x\"")
        ->required();
    pell_cmd->add_option("--bound", bound, "expansion step bound");
    pell_cmd->add_option("--variable", pell_var, "variable name (default x)");
    pell_cmd->add_option("--expect", expect_path, "expected-result JSON file");

    std::string ring_path, element_expr;
    auto* norm_cmd = app.add_subcommand("norm", "norm and unit tests of a covering-ring element");
    norm_cmd->add_option("--ring", ring_path, "ring JSON file")->required();
    norm_cmd->add_option("element", element_expr, "element expression, e.g. \"z - x*y\"")
        ->required();
    norm_cmd->add_option("--expect", expect_path, "expected-result JSON file");

    auto* scen_cmd = app.add_subcommand("scenario", "run scenario files");
    std::string scen_file, scen_dir;
    auto* scen_run = scen_cmd->add_subcommand("run", "run one scenario file");
    scen_run->add_option("file", scen_file, "scenario JSON file")->required();
    auto* scen_suite = scen_cmd->add_subcommand("suite", "run every scenario in a directory");
    scen_suite->add_option("dir", scen_dir, "directory of scenario JSON files")->required();
    scen_cmd->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*snf_cmd) {
            Scenario s{"cli-snf", "snf", json{{"matrix", read_json_input(input)}},
                       read_expect(expect_path)};
            return run_one(s, as_json);
        }
        if (*coh_cmd) {
            Scenario s{"cli-cohomology", "cohomology", json{{"module", read_json_input(input)}},
                       read_expect(expect_path)};
            return run_one(s, as_json);
        }
        if (*nag_cmd) {
            json doc = read_json_input(input);
            json params;
            if (doc.contains("presentation"))
                params = doc; // already wrapped, may carry candidates/labels
            else
                params = json{{"presentation", doc}};
            Scenario s{"cli-nagata", "nagata", params, read_expect(expect_path)};
            return run_one(s, as_json);
        }
        if (*pell_cmd) {
            Scenario s{"cli-pell", "pell",
                       json{{"f", pell_f}, {"variable", pell_var}, {"bound", bound}},
                       read_expect(expect_path)};
            return run_one(s, as_json);
        }
        if (*norm_cmd) {
            Scenario s{"cli-norm", "norm",
                       json{{"ring", read_json_input(ring_path)}, {"element", element_expr}},
                       read_expect(expect_path)};
            return run_one(s, as_json);
        }
        if (*scen_run) {
            Scenario s = unitgroups::scenario_from_json(read_json_input(scen_file));
            return run_one(s, as_json);
        }
        if (*scen_suite) {
            unitgroups::SuiteSummary summary = unitgroups::run_suite(scen_dir);
            if (as_json) {
                json entries = json::array();
                for (const auto& e : summary.entries)
                    entries.push_back(json{{"file", e.file},
                                           {"id", e.id},
                                           {"status", e.status},
                                           {"detail", e.detail}});
                json doc{{"scenarios", entries},
                         {"passed", summary.passed},
                         {"failed", summary.failed}};
                std::cout << doc.dump(2) << "\n";
            } else {
                for (const auto& e : summary.entries) {
                    std::cout << (e.status == "pass" ? "ok   " : "FAIL ") << e.file;
                    if (!e.id.empty()) std::cout << " (" << e.id << ")";
                    if (e.status != "pass") std::cout << " [" << e.status << "] " << e.detail;
                    std::cout << "\n";
                }
                std::cout << summary.passed << " passed, " << summary.failed << " failed\n";
            }
            return summary.exit_code;
        }
    } catch (const SchemaError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
