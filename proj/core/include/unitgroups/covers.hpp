#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unitgroups/abelian.hpp"
#include "unitgroups/cohomology.hpp"
#include "unitgroups/divisor.hpp"
#include "unitgroups/int_matrix.hpp"

namespace unitgroups {

/// n x n matrix with diagonal n-1 and off-diagonal -1: the boundary divisors
/// of the candidate units of a product of n hyperplane sections.  Columns
/// are the candidate divisors; every row sums to zero.
IntMatrix hyperplane_matrix(unsigned long n);

/// Product of r forms of degrees d_1, ..., d_r in m >= 2 variables,
/// compactified by a single relation of total degree n = sum d_i.
struct FormProductScenario {
    std::vector<unsigned long> degrees;
    unsigned long ambient_dim = 2; ///< m

    FormProductScenario(std::vector<unsigned long> degs, unsigned long m = 2);
    std::size_t r() const { return degrees.size(); }
    unsigned long n() const;
};

/// r x r matrix with entry (i, j) = n*[i==j] - d_j; column j is the boundary
/// divisor of the j-th candidate unit.  Degrees (1,...,1) reduce to
/// hyperplane_matrix(r).
IntMatrix form_product_matrix(const FormProductScenario& s);

/// Boundary presentation assembled from the invariant-factor decomposition
/// of the form-product matrix, together with the first r-1 candidate
/// columns.  Only valid when the degrees are coprime.
struct AssembledFormProduct {
    NagataPresentation presentation;
    CandidateUnits candidates;
};
AssembledFormProduct form_product_presentation(const FormProductScenario& s);

struct FormProductReport {
    std::vector<unsigned long> degrees;
    unsigned long n = 0;
    std::vector<mpz_class> factors; ///< invariant factors of the matrix
    mpz_class degree_gcd;
    bool applicable = false; ///< coprime degrees
    // present only when applicable:
    std::optional<FgAbelianGroup> boundary;       ///< Z + (Z/n)^(r-2)
    std::optional<std::size_t> unit_rank;         ///< r-1
    std::optional<mpz_class> index;               ///< 1
    std::vector<std::string> basis_labels;        ///< f1, ..., f(r-1)
};

/// Full analysis of a form product: invariant factors always; when the
/// degrees are coprime, the boundary subgroup, unit rank and candidate index
/// computed through the divisor engine.
FormProductReport analyze_form_product(const FormProductScenario& s);

/// Genus (p-1)(n-2)/2 of the smooth completion of y^p = f(x) with
/// deg f = n, p | n, n >= 3.
unsigned long genus_rh(unsigned long p, unsigned long n);

/// Unit rank 3n-1 of the Fermat curve of degree n localized away from the
/// coordinate axes: 3n boundary points whose class subgroup is Z extended by
/// a finite group annihilated by n (the finiteness is an input assumption).
std::size_t fermat_unit_rank(unsigned long n);

/// Degree-map presentation of the same scenario, for engine cross-checks.
NagataPresentation fermat_presentation(unsigned long n);

struct CohomologyTable {
    FgAbelianGroup h0;
    FgAbelianGroup h_odd;
    FgAbelianGroup h_even; ///< value at i = 2, 4, ...
};

/// Cohomology of a rank-nu trivial module of a cyclic group of order n:
/// the unit group of a localization of affine space modulo scalars.
CohomologyTable prop_2_1_table(unsigned long n, std::size_t nu);

struct RamifiedBoundaryReport {
    std::size_t unit_rank = 0;      ///< r - 1
    FgAbelianGroup h1_mu;           ///< (Z/nu)^(r-1)
};

/// r coprime boundary divisors on projective space: unit rank r-1 and the
/// Kummer cohomology (Z/nu)^(r-1), the latter as units tensor Z/nu.
RamifiedBoundaryReport prop_3_9_table(std::size_t r, unsigned long nu);

NagataPresentation prop_3_9_presentation(std::size_t r);

struct IrreducibleCoverTable {
    unsigned long n = 0;
    std::string t_h0;          ///< units of the cover ring: scalars only
    FgAbelianGroup t_odd;      ///< Z/n
    FgAbelianGroup t_even;     ///< trivial
    std::string s_h0;          ///< units upstairs: scalars times the ramification equation
    FgAbelianGroup s_positive; ///< trivial for all i > 0
};

/// Cohomology of the unit groups of a degree-n cover with irreducible
/// ramification divisor; the cyclic value in odd degree is reproduced by a
/// one-generator module computation.
IrreducibleCoverTable theorem_2_8_table(unsigned long n);

} // namespace unitgroups
