#include "unitgroups/covers.hpp"

#include <numeric>
#include <stdexcept>

#include "unitgroups/normal_form.hpp"

namespace unitgroups {

IntMatrix hyperplane_matrix(unsigned long n) {
    if (n < 2) throw std::invalid_argument("hyperplane_matrix: n must be >= 2");
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j) ? mpz_class(n - 1) : mpz_class(-1);
    return m;
}

FormProductScenario::FormProductScenario(std::vector<unsigned long> degs, unsigned long m)
    : degrees(std::move(degs)), ambient_dim(m) {
    if (degrees.size() < 2) throw std::invalid_argument("FormProductScenario: need r >= 2 factors");
    if (ambient_dim < 2) throw std::invalid_argument("FormProductScenario: need m >= 2 variables");
    for (auto d : degrees)
        if (d == 0) throw std::invalid_argument("FormProductScenario: degrees must be positive");
}

unsigned long FormProductScenario::n() const {
    return std::accumulate(degrees.begin(), degrees.end(), 0ul);
}

IntMatrix form_product_matrix(const FormProductScenario& s) {
    const std::size_t r = s.r();
    const unsigned long n = s.n();
    IntMatrix m(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            m(i, j) = -mpz_class(s.degrees[j]);
            if (i == j) m(i, j) += n;
        }
    return m;
}

namespace {

mpz_class degrees_gcd(const std::vector<unsigned long>& degrees) {
    mpz_class g = 0;
    for (auto d : degrees) {
        mpz_class dd(d);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), dd.get_mpz_t());
    }
    return g;
}

} // namespace

AssembledFormProduct form_product_presentation(const FormProductScenario& s) {
    if (degrees_gcd(s.degrees) != 1)
        throw std::invalid_argument("form_product_presentation: degrees must be coprime");
    const std::size_t r = s.r();
    const unsigned long n = s.n();
    IntMatrix c = form_product_matrix(s);
    SmithDecomposition dec = snf(c);
    // coprime degrees force invariant factors 1, n (r-2 times), 0
    if (dec.factors.front() != 1 || dec.factors.back() != 0)
        throw std::logic_error("form_product_presentation: unexpected invariant factors");
    for (std::size_t i = 1; i + 1 < r; ++i)
        if (dec.factors[i] != n)
            throw std::logic_error("form_product_presentation: unexpected invariant factors");

    // Z^r / span(c) in the coordinates of U: drop the factor-1 row, keep the
    // r-2 rows of order n and the free row; chi is U without its first row.
    IntMatrix relations(r - 1, r - 2);
    for (std::size_t i = 0; i + 1 < r - 1; ++i) relations(i, i) = n;
    Presentation target(r - 1, relations);
    IntMatrix chi = dec.u.row_slice(1, r);
    NagataPresentation pres(r, target, chi,
                            "target presented from the invariant factors of the candidate "
                            "divisor matrix; faithful because the candidates exhaust the kernel");

    CandidateUnits cands;
    cands.divisors = c.col_slice(0, r - 1);
    for (std::size_t j = 0; j + 1 < r; ++j) cands.labels.push_back("f" + std::to_string(j + 1));
    return AssembledFormProduct{std::move(pres), std::move(cands)};
}

FormProductReport analyze_form_product(const FormProductScenario& s) {
    FormProductReport rep;
    rep.degrees = s.degrees;
    rep.n = s.n();
    IntMatrix c = form_product_matrix(s);
    rep.factors = snf(c).factors;
    rep.degree_gcd = degrees_gcd(s.degrees);
    rep.applicable = rep.degree_gcd == 1;
    if (!rep.applicable) return rep;

    AssembledFormProduct assembled = form_product_presentation(s);
    rep.boundary = boundary_subgroup(assembled.presentation);
    rep.unit_rank = unit_lattice(assembled.presentation).rank;
    rep.index = candidate_index(assembled.candidates, assembled.presentation);
    rep.basis_labels = assembled.candidates.labels;
    return rep;
}

unsigned long genus_rh(unsigned long p, unsigned long n) {
    if (!is_prime(p)) throw std::invalid_argument("genus_rh: p must be prime");
    if (n < 3) throw std::invalid_argument("genus_rh: n must be >= 3");
    if (n % p != 0) throw std::invalid_argument("genus_rh: p must divide n");
    return (p - 1) * (n - 2) / 2;
}

std::size_t fermat_unit_rank(unsigned long n) {
    if (n < 2) throw std::invalid_argument("fermat_unit_rank: n must be >= 2");
    // 3n boundary points; the degree map splits off Z and the kernel is
    // finite (annihilated by n), so the boundary subgroup has free rank 1.
    FgAbelianGroup h = FgAbelianGroup::free(1);
    return unit_rank_from_boundary(3 * n, h);
}

NagataPresentation fermat_presentation(unsigned long n) {
    if (n < 2) throw std::invalid_argument("fermat_presentation: n must be >= 2");
    const std::size_t r = 3 * n;
    IntMatrix chi(1, r);
    for (std::size_t j = 0; j < r; ++j) chi(0, j) = 1;
    return NagataPresentation(r, Presentation(1, IntMatrix(1, 0)), chi,
                              "degree map only; the degree-zero part of the boundary subgroup "
                              "is finite and annihilated by n (input assumption), so ranks are "
                              "computed faithfully");
}

CohomologyTable prop_2_1_table(unsigned long n, std::size_t nu) {
    CyclicGModule m = CyclicGModule::trivial_action(n, nu);
    return CohomologyTable{cohomology(m, 0), cohomology(m, 1), cohomology(m, 2)};
}

NagataPresentation prop_3_9_presentation(std::size_t r) {
    if (r < 1) throw std::invalid_argument("prop_3_9_presentation: r must be >= 1");
    IntMatrix chi(1, r);
    for (std::size_t j = 0; j < r; ++j) chi(0, j) = 1;
    return NagataPresentation(r, Presentation(1, IntMatrix(1, 0)), chi,
                              "boundary divisors of coprime degree on projective space; the "
                              "target is the full class group Z and the affine class group "
                              "vanishes");
}

RamifiedBoundaryReport prop_3_9_table(std::size_t r, unsigned long nu) {
    if (nu < 1) throw std::invalid_argument("prop_3_9_table: nu must be >= 1");
    NagataPresentation p = prop_3_9_presentation(r);
    RamifiedBoundaryReport rep;
    rep.unit_rank = unit_lattice(p).rank;
    FgAbelianGroup units = FgAbelianGroup::free(rep.unit_rank);
    rep.h1_mu = nu == 1 ? FgAbelianGroup::trivial() : tensor_mod(units, mpz_class(nu));
    return rep;
}

IrreducibleCoverTable theorem_2_8_table(unsigned long n) {
    if (n < 2) throw std::invalid_argument("theorem_2_8_table: n must be >= 2");
    IrreducibleCoverTable t;
    t.n = n;
    t.t_h0 = "k*";
    // the odd value is the n-torsion of a one-generator module with trivial
    // action: <z>/<z^n>
    CyclicGModule one = CyclicGModule::trivial_action(n, 1);
    t.t_odd = cohomology(one, 2);
    t.t_even = FgAbelianGroup::trivial();
    t.s_h0 = "k* x <f>";
    t.s_positive = FgAbelianGroup::trivial();
    return t;
}

} // namespace unitgroups
