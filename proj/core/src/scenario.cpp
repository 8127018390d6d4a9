#include "unitgroups/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "unitgroups/covers.hpp"
#include "unitgroups/expression.hpp"
#include "unitgroups/normal_form.hpp"
#include "unitgroups/pell.hpp"

namespace unitgroups {

namespace {

const json& need(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key))
        throw SchemaError(std::string("missing required field '") + key + "'");
    return obj.at(key);
}

json factors_to_json(const std::vector<mpz_class>& factors) {
    json a = json::array();
    for (const auto& f : factors) a.push_back(f.get_str());
    return a;
}

json index_to_json(const std::optional<mpz_class>& idx) {
    if (!idx) return "infinite";
    return idx->get_str();
}

json run_snf(const json& params) {
    IntMatrix m = matrix_from_json(need(params, "matrix"));
    SmithDecomposition d = snf(m);
    return json{{"factors", factors_to_json(d.factors)},
                {"cokernel", to_json(cokernel(m))}};
}

json run_hyperplane(const json& params) {
    unsigned long n = need(params, "n").get<unsigned long>();
    IntMatrix m = hyperplane_matrix(n);
    SmithDecomposition d = snf(m);
    FgAbelianGroup coker = cokernel(m);
    // when the receiving class group is unknown, the snake lemma still caps
    // the index of the candidate units by the torsion order of the cokernel
    mpz_class bound = 1;
    for (const auto& t : coker.torsion) bound *= t;
    return json{{"n", n},
                {"matrix", to_json(m)},
                {"factors", factors_to_json(d.factors)},
                {"cokernel", to_json(coker)},
                {"index_bound", bound.get_str()}};
}

json run_form_product(const json& params) {
    std::vector<unsigned long> degrees;
    for (const auto& d : need(params, "degrees")) degrees.push_back(d.get<unsigned long>());
    unsigned long m = params.value("m", 2ul);
    FormProductReport rep = analyze_form_product(FormProductScenario(degrees, m));
    json out{{"degrees", degrees},
             {"n", rep.n},
             {"factors", factors_to_json(rep.factors)},
             {"gcd", rep.degree_gcd.get_str()},
             {"applicable", rep.applicable}};
    if (rep.applicable) {
        out["boundary_subgroup"] = to_json(*rep.boundary);
        out["unit_rank"] = *rep.unit_rank;
        out["candidate_index"] = index_to_json(rep.index);
        out["basis"] = rep.basis_labels;
    }
    return out;
}

json run_cohomology(const json& params) {
    CyclicGModule m = module_from_json(need(params, "module"));
    return json{{"h0", to_json(cohomology(m, 0))},
                {"h_odd", to_json(cohomology(m, 1))},
                {"h_even", to_json(cohomology(m, 2))}};
}

json run_nagata(const json& params) {
    NagataPresentation p = nagata_from_json(need(params, "presentation"));
    UnitLattice units = unit_lattice(p);
    json out{{"rank", units.rank},
             {"unit_basis", to_json(units.basis)},
             {"boundary_subgroup", to_json(boundary_subgroup(p))},
             {"class_group", to_json(class_cokernel(p))}};
    if (params.contains("candidates")) {
        CandidateUnits c;
        c.divisors = matrix_from_json(params.at("candidates"));
        if (params.contains("labels"))
            c.labels = params.at("labels").get<std::vector<std::string>>();
        out["candidate_index"] = index_to_json(candidate_index(c, p));
    }
    return out;
}

json run_fermat(const json& params) {
    unsigned long n = need(params, "n").get<unsigned long>();
    std::size_t rank = fermat_unit_rank(n);
    std::size_t engine_rank = unit_lattice(fermat_presentation(n)).rank;
    return json{{"n", n},
                {"rank", rank},
                {"engine_rank", engine_rank},
                {"consistent", rank == engine_rank}};
}

json run_pell(const json& params) {
    std::string var = params.value("variable", std::string("x"));
    std::string src = need(params, "f").get<std::string>();
    MultiPoly f = parse_polynomial(src, {var}, 1);
    unsigned long bound = params.value("bound", 20ul);
    PellResult r = pell_solve(f, bound);
    json out{{"f", src}, {"bound", bound}, {"found", r.solution.has_value()}};
    if (r.solution) {
        out["a"] = univariate_to_multipoly(r.solution->a, 1, 1, 0).to_string({var});
        out["b"] = univariate_to_multipoly(r.solution->b, 1, 1, 0).to_string({var});
        out["c"] = mpq_to_string(r.solution->c);
        out["steps"] = r.solution->steps;
    } else {
        out["bound_reached"] = r.bound_reached;
        out["scope"] = "no solution within " + std::to_string(bound) +
                       " expansion steps over rational coefficients";
    }
    return out;
}

json run_norm(const json& params) {
    CoverRingPtr ring = ring_from_json(need(params, "ring"));
    std::string src = need(params, "element").get<std::string>();
    CoverElement u = parse_cover_element(src, ring);
    MultiPoly n = norm(u);
    MultiPoly nd = norm_via_determinant(u);
    return json{{"element", src},
                {"norm", n.to_string(ring->variable_names)},
                {"norm_determinant_agrees", n == nd},
                {"is_unit", is_unit(u)},
                {"is_unit_in_localization", is_unit_in_localization(u)}};
}

json run_unit_search(const json& params) {
    CoverRingPtr ring = ring_from_json(need(params, "ring"));
    unsigned long degree_bound = params.value("degree_bound", 2ul);
    unsigned long support_bound = params.value("support_bound", 2ul);
    std::vector<CoverElement> units = unit_search(ring, degree_bound, support_bound);
    std::vector<std::string> names;
    names.reserve(units.size());
    for (const auto& u : units) names.push_back(u.to_string());
    std::sort(names.begin(), names.end());
    return json{{"degree_bound", degree_bound},
                {"support_bound", support_bound},
                {"units", names},
                {"scope", "absence of units is certified only up to the stated bounds and "
                          "over the cyclotomic-rational coefficient field"}};
}

json run_table(const json& params) {
    std::string table = need(params, "table").get<std::string>();
    if (table == "unit-cohomology-trivial-action" || table == "prop-2.1c") {
        unsigned long n = need(params, "n").get<unsigned long>();
        std::size_t nu = need(params, "nu").get<std::size_t>();
        CohomologyTable t = prop_2_1_table(n, nu);
        return json{{"table", table},
                    {"n", n},
                    {"nu", nu},
                    {"h0", to_json(t.h0)},
                    {"h_odd", to_json(t.h_odd)},
                    {"h_even", to_json(t.h_even)}};
    }
    if (table == "coprime-boundary" || table == "prop-3.9") {
        std::size_t r = need(params, "r").get<std::size_t>();
        unsigned long nu = need(params, "nu").get<unsigned long>();
        RamifiedBoundaryReport rep = prop_3_9_table(r, nu);
        return json{{"table", table},
                    {"r", r},
                    {"nu", nu},
                    {"unit_rank", rep.unit_rank},
                    {"h1_mu", to_json(rep.h1_mu)}};
    }
    if (table == "irreducible-ramification" || table == "theorem-2.8") {
        unsigned long n = need(params, "n").get<unsigned long>();
        IrreducibleCoverTable t = theorem_2_8_table(n);
        return json{{"table", table},
                    {"n", n},
                    {"t_h0", t.t_h0},
                    {"t_odd", to_json(t.t_odd)},
                    {"t_even", to_json(t.t_even)},
                    {"s_h0", t.s_h0},
                    {"s_positive", to_json(t.s_positive)}};
    }
    if (table == "genus-rh") {
        unsigned long p = need(params, "p").get<unsigned long>();
        unsigned long n = need(params, "n").get<unsigned long>();
        return json{{"table", table}, {"p", p}, {"n", n}, {"genus", genus_rh(p, n)}};
    }
    throw SchemaError("unknown table '" + table + "'");
}

bool integer_like(const json& j, mpz_class& out) {
    try {
        if (j.is_number_integer()) {
            out = mpz_class(j.dump());
            return true;
        }
        if (j.is_string()) {
            const std::string& s = j.get_ref<const std::string&>();
            if (s.empty()) return false;
            std::size_t start = s[0] == '-' ? 1 : 0;
            if (start == s.size()) return false;
            for (std::size_t i = start; i < s.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
            out = mpz_class(s);
            return true;
        }
    } catch (...) {
    }
    return false;
}

} // namespace

Scenario scenario_from_json(const json& doc) {
    static const std::vector<std::string> kinds = {
        "snf",  "cohomology", "nagata", "form_product", "hyperplane",
        "fermat", "pell",     "norm",   "unit_search",  "table"};
    Scenario s;
    s.id = need(doc, "id").get<std::string>();
    s.kind = need(doc, "kind").get<std::string>();
    if (std::find(kinds.begin(), kinds.end(), s.kind) == kinds.end())
        throw SchemaError("unknown scenario kind '" + s.kind + "'");
    s.params = need(doc, "params");
    if (!s.params.is_object()) throw SchemaError("params must be an object");
    if (doc.contains("expect")) {
        if (!doc.at("expect").is_object()) throw SchemaError("expect must be an object");
        s.expect = doc.at("expect");
    }
    return s;
}

bool json_subset_match(const json& expect, const json& actual, const std::string& path,
                       std::vector<std::string>& mismatches) {
    if (expect.is_object()) {
        if (!actual.is_object()) {
            mismatches.push_back(path + ": expected an object");
            return false;
        }
        bool ok = true;
        for (const auto& [key, value] : expect.items()) {
            std::string sub = path.empty() ? key : path + "." + key;
            if (!actual.contains(key)) {
                mismatches.push_back(sub + ": missing from report");
                ok = false;
                continue;
            }
            if (!json_subset_match(value, actual.at(key), sub, mismatches)) ok = false;
        }
        return ok;
    }
    if (expect.is_array()) {
        if (!actual.is_array() || actual.size() != expect.size()) {
            mismatches.push_back(path + ": array shape differs");
            return false;
        }
        bool ok = true;
        for (std::size_t i = 0; i < expect.size(); ++i)
            if (!json_subset_match(expect.at(i), actual.at(i), path + "[" + std::to_string(i) + "]",
                                   mismatches))
                ok = false;
        return ok;
    }
    if (expect == actual) return true;
    mpz_class a, b;
    if (integer_like(expect, a) && integer_like(actual, b) && a == b) return true;
    mismatches.push_back(path + ": expected " + expect.dump() + ", got " + actual.dump());
    return false;
}

int exit_code(const ScenarioOutcome& o) { return o.pass ? 0 : 1; }

ScenarioOutcome run_scenario(const Scenario& s) {
    auto t0 = std::chrono::steady_clock::now();
    json results;
    if (s.kind == "snf") results = run_snf(s.params);
    else if (s.kind == "hyperplane") results = run_hyperplane(s.params);
    else if (s.kind == "form_product") results = run_form_product(s.params);
    else if (s.kind == "cohomology") results = run_cohomology(s.params);
    else if (s.kind == "nagata") results = run_nagata(s.params);
    else if (s.kind == "fermat") results = run_fermat(s.params);
    else if (s.kind == "pell") results = run_pell(s.params);
    else if (s.kind == "norm") results = run_norm(s.params);
    else if (s.kind == "unit_search") results = run_unit_search(s.params);
    else if (s.kind == "table") results = run_table(s.params);
    else throw SchemaError("unknown scenario kind '" + s.kind + "'");

    ScenarioOutcome out;
    out.report = json{{"id", s.id}, {"kind", s.kind}, {"params", s.params},
                      {"results", std::move(results)}};
    if (s.expect) {
        out.pass = json_subset_match(*s.expect, out.report.at("results"), "", out.mismatches);
        out.report["expect"] = *s.expect;
        out.report["pass"] = out.pass;
    }
    out.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

SuiteSummary run_suite(const std::string& dir) {
    namespace fs = std::filesystem;
    SuiteSummary summary;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    for (const auto& file : files) {
        SuiteEntry e;
        e.file = file.filename().string();
        try {
            std::ifstream in(file);
            if (!in) throw std::runtime_error("cannot open file");
            json doc = json::parse(in);
            Scenario s = scenario_from_json(doc);
            e.id = s.id;
            ScenarioOutcome o = run_scenario(s);
            e.wall_seconds = o.wall_seconds;
            if (o.pass) {
                e.status = "pass";
                ++summary.passed;
            } else {
                e.status = "fail";
                e.detail = o.mismatches.empty() ? "" : o.mismatches.front();
                ++summary.failed;
            }
        } catch (const SchemaError& ex) {
            e.status = "schema-error";
            e.detail = ex.what();
            ++summary.failed;
        } catch (const std::exception& ex) {
            e.status = "error";
            e.detail = ex.what();
            ++summary.failed;
        }
        summary.entries.push_back(std::move(e));
    }
    summary.exit_code = summary.failed == 0 ? 0 : 1;
    return summary;
}

} // namespace unitgroups
