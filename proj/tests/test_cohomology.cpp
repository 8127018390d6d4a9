#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unitgroups/cohomology.hpp>
#include <unitgroups/normal_form.hpp>

#include "generators.hpp"

using namespace unitgroups;
using testgen::Rng;

namespace {

CyclicGModule sign_module() {
    return CyclicGModule(2, Presentation(1, IntMatrix(1, 0)), IntMatrix{{-1}});
}

// three generators u1, u2, u3 with sigma(u1) = -u1, sigma(u2) = u2 - u1,
// sigma(u3) = u3 - u1 and n = 2: the unit group of the localized double
// cover branched at two conics, modulo scalars
CyclicGModule localized_cover_module() {
    IntMatrix action(3, 3);
    action(0, 0) = -1;
    action(0, 1) = -1;
    action(0, 2) = -1;
    action(1, 1) = 1;
    action(2, 2) = 1;
    return CyclicGModule(2, Presentation(3, IntMatrix(3, 0)), action);
}

} // namespace

TEST_CASE("norm and difference matrices") {
    CyclicGModule triv = CyclicGModule::trivial_action(4, 3);
    IntMatrix n4 = norm_matrix(triv);
    CHECK(n4 == IntMatrix{{4, 0, 0}, {0, 4, 0}, {0, 0, 4}});
    CHECK(difference_matrix(triv).is_zero());

    CyclicGModule sgn = sign_module();
    CHECK(norm_matrix(sgn) == IntMatrix{{0}});
    CHECK(difference_matrix(sgn) == IntMatrix{{-2}});

    CyclicGModule order_one = CyclicGModule::trivial_action(1, 2);
    CHECK(norm_matrix(order_one) == IntMatrix::identity(2));
}

TEST_CASE("construction rejects invalid actions eagerly") {
    // sigma^2 != 1 on Z
    CHECK_THROWS_AS(CyclicGModule(2, Presentation(1, IntMatrix(1, 0)), IntMatrix{{2}}),
                    std::invalid_argument);
    // relation lattice 4Z, doubling does not satisfy sigma^2 = 1 mod 4
    IntMatrix rel(1, 1);
    rel(0, 0) = 4;
    CHECK_THROWS_AS(CyclicGModule(2, Presentation(1, rel), IntMatrix{{2}}),
                    std::invalid_argument);
    // swap of generators does not preserve the relation lattice (2Z x 3Z)
    IntMatrix rel2(2, 2);
    rel2(0, 0) = 2;
    rel2(1, 1) = 3;
    IntMatrix swap(2, 2);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    CHECK_THROWS_AS(CyclicGModule(2, Presentation(2, rel2), swap), std::invalid_argument);
}

TEST_CASE("sign action on Z") {
    CyclicGModule m = sign_module();
    CHECK(cohomology(m, 0).is_trivial());
    CHECK(cohomology(m, 1) == FgAbelianGroup::cyclic(2));
    CHECK(cohomology(m, 2).is_trivial());
}

TEST_CASE("localized double cover module") {
    CyclicGModule m = localized_cover_module();
    CHECK(cohomology(m, 0) == FgAbelianGroup::free(2));
    CHECK(fixed_submodule(m) == FgAbelianGroup::free(2));
    CHECK(cohomology(m, 1).is_trivial());
    CHECK(cohomology(m, 2) == FgAbelianGroup::cyclic(2));
}

TEST_CASE("trivial action tables") {
    for (unsigned long n : {2ul, 3ul, 4ul}) {
        for (std::size_t nu : {1u, 2u, 3u}) {
            CyclicGModule m = CyclicGModule::trivial_action(n, nu);
            CHECK(cohomology(m, 0) == FgAbelianGroup::free(nu));
            CHECK(cohomology(m, 1).is_trivial());
            CHECK(cohomology(m, 2) ==
                  FgAbelianGroup{0, std::vector<mpz_class>(nu, mpz_class(n))});
        }
    }
    // trivial module
    CyclicGModule none(3, Presentation(0, IntMatrix(0, 0)), IntMatrix(0, 0));
    for (unsigned long i = 0; i < 4; ++i) CHECK(cohomology(none, i).is_trivial());
}

TEST_CASE("fixed submodule of a transposition of free generators") {
    IntMatrix swap(2, 2);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    CyclicGModule m(2, Presentation(2, IntMatrix(2, 0)), swap);
    CHECK(fixed_submodule(m) == FgAbelianGroup::free(1));
}

TEST_CASE("herbrand check on fixed modules") {
    IntMatrix r5(1, 1);
    r5(0, 0) = 5;
    CyclicGModule m5(3, Presentation(1, r5), IntMatrix::identity(1));
    CHECK(herbrand_check(m5));
    CHECK(cohomology(m5, 1).is_trivial());
    CHECK(cohomology(m5, 2).is_trivial());

    IntMatrix r4(1, 1);
    r4(0, 0) = 4;
    CyclicGModule m4(2, Presentation(1, r4), IntMatrix{{-1}});
    CHECK(herbrand_check(m4));

    CyclicGModule none(2, Presentation(0, IntMatrix(0, 0)), IntMatrix(0, 0));
    CHECK(herbrand_check(none));

    CHECK_THROWS_AS(herbrand_check(sign_module()), std::invalid_argument);
}

TEST_CASE("herbrand property on random finite modules") {
    Rng rng(2024);
    for (int t = 0; t < 60; ++t) {
        unsigned long n = 2 + static_cast<unsigned long>(rng.uniform(0, 4));
        CyclicGModule m = testgen::random_finite_module(rng, n);
        CAPTURE(t);
        CHECK(herbrand_check(m));
    }
}

TEST_CASE("periodicity, composite vanishing and n-torsion") {
    Rng rng(555);
    for (int t = 0; t < 25; ++t) {
        unsigned long n = 2 + static_cast<unsigned long>(rng.uniform(0, 4));
        CyclicGModule m = testgen::random_finite_module(rng, n);
        IntMatrix nd = norm_matrix(m) * difference_matrix(m);
        IntMatrix dn = difference_matrix(m) * norm_matrix(m);
        LinearSolver rel(m.presentation().relations);
        for (std::size_t j = 0; j < nd.cols(); ++j) {
            CHECK(rel.solve_integer(nd.column(j)).has_value());
            CHECK(rel.solve_integer(dn.column(j)).has_value());
        }
        for (unsigned long i = 1; i <= 3; ++i) {
            FgAbelianGroup a = cohomology(m, i);
            CHECK(a == cohomology(m, i + 2));
            mpz_class e = a.torsion_exponent();
            CHECK(mpz_class(n) % e == 0);
        }
    }
}
