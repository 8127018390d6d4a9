#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unitgroups/int_matrix.hpp"

namespace unitgroups {

/// Finitely generated abelian group in invariant-factor normal form:
/// Z^free_rank + Z/d_1 + ... + Z/d_k with 2 <= d_1 | d_2 | ... | d_k.
/// Equality of values is isomorphism of groups.
struct FgAbelianGroup {
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion;

    /// Builds the canonical form from any list of cyclic orders; entries
    /// equal to 1 drop out, coprime factors merge into divisibility order
    /// (2, 3 becomes 6), zeros count toward the free rank.
    static FgAbelianGroup canonical(std::size_t free_rank, std::vector<mpz_class> orders);
    static FgAbelianGroup trivial() { return {}; }
    static FgAbelianGroup free(std::size_t rank) { return {rank, {}}; }
    static FgAbelianGroup cyclic(const mpz_class& n);

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_finite() const { return free_rank == 0; }
    /// Group order; nullopt when infinite.
    std::optional<mpz_class> order() const;
    /// Exponent of the torsion subgroup (1 when torsion free).
    mpz_class torsion_exponent() const;

    std::string to_string() const;

    friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;
};

/// Presentation of an abelian group: generator count plus a relation matrix
/// whose columns are relators in those generators.
struct Presentation {
    std::size_t generators = 0;
    IntMatrix relations; ///< generators x (number of relators)

    Presentation() = default;
    Presentation(std::size_t gens, IntMatrix rels);
};

FgAbelianGroup presentation_to_group(const Presentation& p);

/// Z^rows / column-span(A), canonical form.
FgAbelianGroup cokernel(const IntMatrix& a);

/// Quotient of column-span lattices num/den inside a common ambient Z^g.
/// Every generator of den must lie in the lattice spanned by num.
FgAbelianGroup quotient_group(const IntMatrix& num, const IntMatrix& den);

/// G tensor Z/n.
FgAbelianGroup tensor_mod(const FgAbelianGroup& g, const mpz_class& n);

/// Tor_1(G, Z/n): direct sum of Z/gcd(d, n) over the torsion factors d.
FgAbelianGroup tor1_mod(const FgAbelianGroup& g, const mpz_class& n);

} // namespace unitgroups
