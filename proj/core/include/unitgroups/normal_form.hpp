#pragma once

#include <optional>
#include <vector>

#include "unitgroups/int_matrix.hpp"

namespace unitgroups {

struct HermiteForm {
    IntMatrix h; ///< row echelon form, pivots positive, entries above a pivot reduced into [0, pivot)
    IntMatrix u; ///< unimodular, u * a == h
    std::size_t rank = 0;
};

/// Row-operation Hermite normal form: returns (H, U) with U*A = H and |det U| = 1.
HermiteForm hnf(const IntMatrix& a);

struct SmithDecomposition {
    IntMatrix u; ///< rows x rows, unimodular
    IntMatrix s; ///< diagonal, d_i | d_{i+1}, zeros trailing
    IntMatrix v; ///< cols x cols, unimodular
    std::vector<mpz_class> factors; ///< diagonal of s, in order
};

/// Smith normal form: U*A*V = S with unimodular U, V.  Pivoting prefers the
/// entry of minimum absolute value to keep coefficient growth down.
SmithDecomposition snf(const IntMatrix& a);

/// Invariant factors by the method of minors: d_k = g_k / g_{k-1} where g_k
/// is the gcd of all k x k minors.  Independent of snf(); test oracle.
/// Guarded to matrices with max dimension 8 (minor enumeration is factorial).
std::vector<mpz_class> minors_gcd_factors(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

/// Basis of the integer kernel {v : A v = 0} as matrix columns.  The kernel
/// lattice of an integer matrix equals its saturation; the basis returned is
/// Hermite-reduced so the result is deterministic.
IntMatrix kernel_basis(const IntMatrix& a);

/// Canonical basis of the lattice spanned by the columns of `a` (independent
/// columns, Hermite-reduced).
IntMatrix column_basis(const IntMatrix& a);

/// Solves A x = b over the integers; does repeated right-hand sides against
/// one Smith decomposition.
class LinearSolver {
public:
    explicit LinearSolver(const IntMatrix& a);

    std::optional<std::vector<mpz_class>> solve_integer(const std::vector<mpz_class>& b) const;
    std::optional<std::vector<mpq_class>> solve_rational(const std::vector<mpz_class>& b) const;
    std::size_t rank() const { return rank_; }

private:
    SmithDecomposition dec_;
    std::size_t rows_, cols_, rank_;
};

bool in_column_span(const IntMatrix& a, const std::vector<mpz_class>& b);

/// Index [span(super) : span(sub)] of column-span lattices.  Returns nullopt
/// (infinite) when ranks differ; throws when a column of `sub` falls outside
/// the rational span of `super`, or outside the lattice itself.
std::optional<mpz_class> lattice_index(const IntMatrix& sub, const IntMatrix& super);

/// Basis of the preimage lattice {x : F x lies in the column span of R}.
IntMatrix preimage_lattice(const IntMatrix& f, const IntMatrix& relations);

} // namespace unitgroups
