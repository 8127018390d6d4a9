#include "unitgroups/serialize.hpp"

#include <nlohmann/json.hpp>

#include "unitgroups/expression.hpp"

namespace unitgroups {

mpz_class mpz_from_json(const json& j) {
    if (j.is_number_integer()) return mpz_class(j.dump());
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw std::invalid_argument("expected an integer or decimal string");
}

mpq_class mpq_from_json(const json& j) {
    if (j.is_number_integer()) return mpq_class(mpz_class(j.dump()));
    if (j.is_string()) {
        mpq_class q(j.get<std::string>());
        q.canonicalize();
        return q;
    }
    throw std::invalid_argument("expected a rational as integer or string");
}

std::string mpq_to_string(const mpq_class& q) {
    return q.get_str();
}

json to_json(const IntMatrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        entries.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw std::invalid_argument("matrix document needs rows, cols, entries");
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows)
        throw std::invalid_argument("matrix entries must hold one array per row");
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = entries.at(i);
        if (!row.is_array() || row.size() != cols)
            throw std::invalid_argument("matrix row of wrong length");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = mpz_from_json(row.at(c));
    }
    return m;
}

json to_json(const FgAbelianGroup& g) {
    json torsion = json::array();
    for (const auto& d : g.torsion) torsion.push_back(d.get_str());
    return json{{"rank", g.free_rank}, {"torsion", std::move(torsion)}};
}

FgAbelianGroup group_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("torsion"))
        throw std::invalid_argument("group document needs rank and torsion");
    std::vector<mpz_class> torsion;
    for (const auto& t : j.at("torsion")) torsion.push_back(mpz_from_json(t));
    return FgAbelianGroup::canonical(j.at("rank").get<std::size_t>(), std::move(torsion));
}

json to_json(const Presentation& p) {
    return json{{"generators", p.generators}, {"relations", to_json(p.relations)}};
}

Presentation presentation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("generators") || !j.contains("relations"))
        throw std::invalid_argument("presentation document needs generators and relations");
    return Presentation(j.at("generators").get<std::size_t>(),
                        matrix_from_json(j.at("relations")));
}

json to_json(const CyclicGModule& m) {
    return json{{"n", m.order()},
                {"generators", m.generator_count()},
                {"relations", to_json(m.presentation().relations)},
                {"action", to_json(m.action())}};
}

CyclicGModule module_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("generators") ||
        !j.contains("relations") || !j.contains("action"))
        throw std::invalid_argument("module document needs n, generators, relations, action");
    std::size_t gens = j.at("generators").get<std::size_t>();
    return CyclicGModule(j.at("n").get<unsigned long>(),
                         Presentation(gens, matrix_from_json(j.at("relations"))),
                         matrix_from_json(j.at("action")));
}

json to_json(const NagataPresentation& p) {
    return json{{"r", p.boundary_count},
                {"target", to_json(p.class_target)},
                {"chi", to_json(p.chi)},
                {"justification", p.justification}};
}

NagataPresentation nagata_from_json(const json& j) {
    if (!j.is_object() || !j.contains("r") || !j.contains("target") || !j.contains("chi"))
        throw std::invalid_argument("boundary document needs r, target, chi");
    return NagataPresentation(j.at("r").get<std::size_t>(),
                              presentation_from_json(j.at("target")),
                              matrix_from_json(j.at("chi")),
                              j.value("justification", std::string{}));
}

json to_json(const CycNumber& c) {
    // common denominator in lowest terms: den plus the numerators of the
    // zeta-power coefficients
    mpz_class den = 1;
    for (const auto& q : c.coeffs()) {
        mpz_class d = q.get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    json nums = json::array();
    for (const auto& q : c.coeffs()) {
        mpz_class n = q.get_num() * (den / q.get_den());
        nums.push_back(n.get_str());
    }
    return json{{"den", den.get_str()}, {"nums", std::move(nums)}};
}

CycNumber cyc_from_json(const json& j, unsigned long conductor) {
    if (!j.is_object() || !j.contains("den") || !j.contains("nums"))
        throw std::invalid_argument("coefficient document needs den and nums");
    mpz_class den = mpz_from_json(j.at("den"));
    if (den == 0) throw std::invalid_argument("coefficient denominator must be nonzero");
    std::vector<mpq_class> coeffs;
    for (const auto& n : j.at("nums")) {
        mpq_class q(mpz_from_json(n), den);
        q.canonicalize();
        coeffs.push_back(q);
    }
    return CycNumber::from_coeffs(conductor, std::move(coeffs));
}

json to_json(const MultiPoly& p) {
    json terms = json::array();
    // descending graded lex, leading term first
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        json expo = json::array();
        for (auto e : it->first) expo.push_back(e);
        terms.push_back(json{{"exponents", std::move(expo)}, {"coeff", to_json(it->second)}});
    }
    return terms;
}

MultiPoly poly_from_json(const json& j, std::size_t nvars, unsigned long conductor) {
    if (!j.is_array()) throw std::invalid_argument("polynomial document must be a term list");
    MultiPoly p(nvars, conductor);
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("exponents") || !t.contains("coeff"))
            throw std::invalid_argument("polynomial term needs exponents and coeff");
        Exponents e;
        for (const auto& x : t.at("exponents")) e.push_back(x.get<std::uint32_t>());
        p.add_term(e, cyc_from_json(t.at("coeff"), conductor));
    }
    return p;
}

CoverRingPtr ring_from_json(const json& j) {
    if (!j.is_object() || !j.contains("variables") || !j.contains("n") || !j.contains("f"))
        throw std::invalid_argument("ring document needs variables, n, f");
    std::vector<std::string> names = j.at("variables").get<std::vector<std::string>>();
    unsigned long n = j.at("n").get<unsigned long>();
    auto read_poly = [&](const json& doc) {
        if (doc.is_string()) return parse_polynomial(doc.get<std::string>(), names, n);
        return poly_from_json(doc, names.size(), n);
    };
    MultiPoly f = read_poly(j.at("f"));
    std::vector<MultiPoly> factors;
    if (j.contains("factors"))
        for (const auto& fj : j.at("factors")) factors.push_back(read_poly(fj));
    return make_cover_ring(names.size(), n, names, std::move(f), std::move(factors));
}

json to_json(const CoverRing& ring) {
    json factors = json::array();
    for (const auto& f : ring.factors) factors.push_back(f.to_string(ring.variable_names));
    return json{{"variables", ring.variable_names},
                {"n", ring.degree},
                {"f", ring.f.to_string(ring.variable_names)},
                {"factors", std::move(factors)}};
}

json to_json(const CoverElement& e) {
    json comps = json::array();
    for (const auto& c : e.components()) comps.push_back(to_json(c));
    return json{{"expression", e.to_string()}, {"components", std::move(comps)}};
}

} // namespace unitgroups
