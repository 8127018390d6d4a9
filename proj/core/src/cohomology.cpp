#include "unitgroups/cohomology.hpp"

#include <stdexcept>

#include "unitgroups/normal_form.hpp"

namespace unitgroups {

CyclicGModule::CyclicGModule(unsigned long order_n, Presentation pres, IntMatrix action)
    : order_n_(order_n), pres_(std::move(pres)), action_(std::move(action)) {
    if (order_n_ < 1) throw std::invalid_argument("CyclicGModule: order must be >= 1");
    const std::size_t m = pres_.generators;
    if (action_.rows() != m || action_.cols() != m)
        throw std::invalid_argument("CyclicGModule: action must be square of generator size");

    const IntMatrix& r = pres_.relations;
    LinearSolver rel(r);
    // sigma(R) inside R, so sigma descends to the quotient
    IntMatrix ar = action_ * r;
    for (std::size_t j = 0; j < ar.cols(); ++j)
        if (!rel.solve_integer(ar.column(j)))
            throw std::invalid_argument("CyclicGModule: action does not preserve the relation lattice");
    // sigma^n = 1 on the quotient
    IntMatrix pn = action_.power(order_n_) - IntMatrix::identity(m);
    for (std::size_t j = 0; j < pn.cols(); ++j)
        if (!rel.solve_integer(pn.column(j)))
            throw std::invalid_argument("CyclicGModule: action order does not divide n on the quotient");
}

CyclicGModule CyclicGModule::trivial_action(unsigned long order_n, std::size_t rank) {
    return CyclicGModule(order_n, Presentation(rank, IntMatrix(rank, 0)),
                         IntMatrix::identity(rank));
}

IntMatrix norm_matrix(const CyclicGModule& m) {
    const std::size_t g = m.generator_count();
    IntMatrix acc = IntMatrix::zero(g, g);
    IntMatrix power = IntMatrix::identity(g);
    for (unsigned long i = 0; i < m.order(); ++i) {
        acc = acc + power;
        if (i + 1 < m.order()) power = power * m.action();
    }
    return acc;
}

IntMatrix difference_matrix(const CyclicGModule& m) {
    return m.action() - IntMatrix::identity(m.generator_count());
}

namespace {

// (ker of map on Z^m/R) / (image lattice + R), all inside Z^m
FgAbelianGroup lifted_subquotient(const IntMatrix& kernel_of, const IntMatrix& image_of,
                                  const IntMatrix& relations) {
    IntMatrix num = preimage_lattice(kernel_of, relations);
    IntMatrix den = relations.cols() == 0 ? image_of : IntMatrix::concat_cols(image_of, relations);
    return quotient_group(num, den);
}

} // namespace

FgAbelianGroup cohomology(const CyclicGModule& m, unsigned long i) {
    const IntMatrix& r = m.presentation().relations;
    IntMatrix d = difference_matrix(m);
    if (i == 0) {
        // fixed points: preimage of R under D, modulo R
        return quotient_group(preimage_lattice(d, r), r);
    }
    IntMatrix n = norm_matrix(m);
    if (i % 2 == 1) return lifted_subquotient(n, d, r);
    return lifted_subquotient(d, n, r);
}

FgAbelianGroup fixed_submodule(const CyclicGModule& m) { return cohomology(m, 0); }

bool herbrand_check(const CyclicGModule& m) {
    FgAbelianGroup whole = presentation_to_group(m.presentation());
    if (!whole.is_finite())
        throw std::invalid_argument("herbrand_check: module must be finite");
    auto even = cohomology(m, 2).order();
    auto odd = cohomology(m, 1).order();
    return even && odd && *even == *odd;
}

} // namespace unitgroups
