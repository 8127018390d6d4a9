#pragma once

#include "unitgroups/abelian.hpp"
#include "unitgroups/int_matrix.hpp"

namespace unitgroups {

/// A finitely generated abelian group Z^m / R together with an automorphism
/// sigma of finite order n, given by its matrix on the generators.
///
/// Construction validates eagerly that sigma is well defined on the quotient
/// (action maps the relation lattice into itself) and that sigma^n acts as
/// the identity; a wrong action would silently corrupt every downstream
/// value.  Invertibility follows: sigma^(n-1) is the inverse.
class CyclicGModule {
public:
    CyclicGModule(unsigned long order_n, Presentation pres, IntMatrix action);

    unsigned long order() const { return order_n_; }
    const Presentation& presentation() const { return pres_; }
    const IntMatrix& action() const { return action_; }
    std::size_t generator_count() const { return pres_.generators; }

    /// Trivial sigma on Z^rank.
    static CyclicGModule trivial_action(unsigned long order_n, std::size_t rank);

private:
    unsigned long order_n_;
    Presentation pres_;
    IntMatrix action_;
};

/// N = 1 + sigma + sigma^2 + ... + sigma^(n-1) on generators.
IntMatrix norm_matrix(const CyclicGModule& m);

/// D = sigma - 1 on generators.
IntMatrix difference_matrix(const CyclicGModule& m);

/// Tate cohomology of the cyclic group G = <sigma> with coefficients in m:
///   H^0 = M^G (kernel of D on the quotient),
///   H^i = ker N / im D for odd i,
///   H^i = ker D / im N for even i >= 2,
/// everything computed by lifting to preimage lattices of the relation
/// lattice, so the answer is exact.  Periodic in i with period 2 for i >= 1.
FgAbelianGroup cohomology(const CyclicGModule& m, unsigned long i);

/// M^G as an abstract group (same as cohomology(m, 0)).
FgAbelianGroup fixed_submodule(const CyclicGModule& m);

/// For a finite module, |H^even| = |H^odd| (trivial Herbrand quotient).
/// Returns that comparison; rejects infinite modules.
bool herbrand_check(const CyclicGModule& m);

} // namespace unitgroups
