#include "unitgroups/abelian.hpp"

#include <sstream>
#include <stdexcept>

#include "unitgroups/normal_form.hpp"

namespace unitgroups {

FgAbelianGroup FgAbelianGroup::canonical(std::size_t free_rank, std::vector<mpz_class> orders) {
    std::vector<mpz_class> nontrivial;
    for (auto& d : orders) {
        if (d < 0) d = -d;
        if (d == 0) {
            ++free_rank;
            continue;
        }
        if (d == 1) continue;
        nontrivial.push_back(d);
    }
    FgAbelianGroup g;
    g.free_rank = free_rank;
    if (nontrivial.empty()) return g;
    // invariant factors of the diagonal matrix, gcd-only (no factoring)
    IntMatrix diag(nontrivial.size(), nontrivial.size());
    for (std::size_t i = 0; i < nontrivial.size(); ++i) diag(i, i) = nontrivial[i];
    for (const auto& f : snf(diag).factors)
        if (f > 1) g.torsion.push_back(f);
    return g;
}

FgAbelianGroup FgAbelianGroup::cyclic(const mpz_class& n) {
    return canonical(0, {n});
}

std::optional<mpz_class> FgAbelianGroup::order() const {
    if (free_rank > 0) return std::nullopt;
    mpz_class o = 1;
    for (const auto& d : torsion) o *= d;
    return o;
}

mpz_class FgAbelianGroup::torsion_exponent() const {
    return torsion.empty() ? mpz_class(1) : torsion.back();
}

std::string FgAbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
        os << "Z";
        first = false;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const auto& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

Presentation::Presentation(std::size_t gens, IntMatrix rels)
    : generators(gens), relations(std::move(rels)) {
    if (relations.rows() != generators)
        throw std::invalid_argument("Presentation: relation rows must equal generator count");
}

FgAbelianGroup presentation_to_group(const Presentation& p) {
    return cokernel(p.relations);
}

FgAbelianGroup cokernel(const IntMatrix& a) {
    SmithDecomposition d = snf(a);
    std::size_t rk = 0;
    std::vector<mpz_class> torsion;
    for (const auto& f : d.factors) {
        if (f != 0) ++rk;
        if (f > 1) torsion.push_back(f);
    }
    return FgAbelianGroup{a.rows() - rk, std::move(torsion)};
}

FgAbelianGroup quotient_group(const IntMatrix& num, const IntMatrix& den) {
    if (den.cols() > 0 && num.rows() != den.rows())
        throw std::invalid_argument("quotient_group: ambient ranks differ");
    IntMatrix basis = column_basis(num);
    const std::size_t l = basis.cols();
    LinearSolver solver(basis);
    std::vector<std::vector<mpz_class>> coords;
    coords.reserve(den.cols());
    for (std::size_t j = 0; j < den.cols(); ++j) {
        auto x = solver.solve_integer(den.column(j));
        if (!x)
            throw std::logic_error("quotient_group: denominator generator outside numerator lattice");
        coords.push_back(std::move(*x));
    }
    return cokernel(IntMatrix::from_columns(l, coords));
}

FgAbelianGroup tensor_mod(const FgAbelianGroup& g, const mpz_class& n) {
    if (n < 2) throw std::invalid_argument("tensor_mod: modulus must be >= 2");
    std::vector<mpz_class> orders;
    orders.reserve(g.free_rank + g.torsion.size());
    for (std::size_t i = 0; i < g.free_rank; ++i) orders.push_back(n);
    for (const auto& d : g.torsion) {
        mpz_class gg;
        mpz_gcd(gg.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        orders.push_back(gg);
    }
    return FgAbelianGroup::canonical(0, std::move(orders));
}

FgAbelianGroup tor1_mod(const FgAbelianGroup& g, const mpz_class& n) {
    if (n < 2) throw std::invalid_argument("tor1_mod: modulus must be >= 2");
    std::vector<mpz_class> orders;
    orders.reserve(g.torsion.size());
    for (const auto& d : g.torsion) {
        mpz_class gg;
        mpz_gcd(gg.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        orders.push_back(gg);
    }
    return FgAbelianGroup::canonical(0, std::move(orders));
}

} // namespace unitgroups
