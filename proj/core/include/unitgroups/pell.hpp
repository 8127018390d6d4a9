#pragma once

#include <optional>
#include <vector>

#include "unitgroups/multipoly.hpp"

namespace unitgroups {

/// Solution of a^2 - f b^2 = c with c a nonzero constant, b normalized
/// monic.  Polynomials are dense rational coefficient vectors, low degree
/// first.
struct PellSolution {
    std::vector<mpq_class> a;
    std::vector<mpq_class> b;
    mpq_class c;
    unsigned long steps = 0; ///< continued-fraction steps consumed

    long b_degree() const { return static_cast<long>(b.size()) - 1; }
};

struct PellResult {
    std::optional<PellSolution> solution;
    unsigned long steps_used = 0;
    bool bound_reached = false; ///< absence claims are scoped to the bound
};

/// Continued-fraction expansion of sqrt(f) in descending powers: walks the
/// convergents until one gives a constant value a^2 - f b^2 or the step
/// bound runs out.  The first hit has minimal deg b; the certificate is
/// re-verified exactly before returning.
///
/// Preconditions: f squarefree of even degree >= 2 with square leading
/// coefficient.  Solvability over Q can be non-periodic, so termination is
/// bound-driven and "no solution" is always relative to the bound.
PellResult pell_solve(const std::vector<mpq_class>& f, unsigned long bound);

/// Convenience entry point: f as a univariate rational MultiPoly.
PellResult pell_solve(const MultiPoly& f, unsigned long bound);

bool squarefree_univariate(const std::vector<mpq_class>& f);
bool leading_coefficient_is_square(const std::vector<mpq_class>& f);

MultiPoly univariate_to_multipoly(const std::vector<mpq_class>& p, std::size_t nvars,
                                  unsigned long conductor, std::size_t var);

} // namespace unitgroups
