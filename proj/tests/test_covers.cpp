#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unitgroups/covers.hpp>
#include <unitgroups/normal_form.hpp>

using namespace unitgroups;

namespace {

std::vector<mpz_class> expected_factors(unsigned long n, std::size_t r) {
    std::vector<mpz_class> f{1};
    for (std::size_t i = 0; i + 2 < r; ++i) f.emplace_back(n);
    f.emplace_back(0);
    return f;
}

} // namespace

TEST_CASE("hyperplane candidate matrices") {
    CHECK(hyperplane_matrix(2) == IntMatrix{{1, -1}, {-1, 1}});
    CHECK(hyperplane_matrix(3) == IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
    CHECK_THROWS_AS(hyperplane_matrix(1), std::invalid_argument);
    for (unsigned long n = 2; n <= 7; ++n) {
        IntMatrix m = hyperplane_matrix(n);
        for (std::size_t i = 0; i < n; ++i) {
            mpz_class sum = 0;
            for (std::size_t j = 0; j < n; ++j) sum += m(i, j);
            CHECK(sum == 0);
        }
        CHECK(snf(m).factors == expected_factors(n, n));
    }
}

TEST_CASE("form product matrices") {
    CHECK(form_product_matrix(FormProductScenario({1, 1, 1})) == hyperplane_matrix(3));
    CHECK(form_product_matrix(FormProductScenario({2, 3})) == IntMatrix{{3, -3}, {-2, 2}});
    IntMatrix m = form_product_matrix(FormProductScenario({2, 3, 5}));
    CHECK(m == IntMatrix{{8, -3, -5}, {-2, 7, -5}, {-2, -3, 5}});
    for (std::size_t i = 0; i < 3; ++i) {
        mpz_class sum = 0;
        for (std::size_t j = 0; j < 3; ++j) sum += m(i, j);
        CHECK(sum == 0);
    }
    CHECK(rank(m) == 2);
    CHECK_THROWS_AS(FormProductScenario({3}), std::invalid_argument);
    CHECK_THROWS_AS(FormProductScenario({1, 2}, 1), std::invalid_argument);
}

TEST_CASE("form product analysis, coprime degrees") {
    FormProductReport r23 = analyze_form_product(FormProductScenario({2, 3}));
    CHECK(r23.factors == expected_factors(5, 2));
    CHECK(r23.applicable);
    CHECK(*r23.unit_rank == 1);
    CHECK(*r23.index == 1);
    CHECK(*r23.boundary == FgAbelianGroup::free(1));
    CHECK(r23.basis_labels == std::vector<std::string>{"f1"});

    FormProductReport r235 = analyze_form_product(FormProductScenario({2, 3, 5}));
    CHECK(r235.factors == expected_factors(10, 3));
    CHECK(*r235.unit_rank == 2);
    CHECK(*r235.index == 1);
    CHECK(*r235.boundary == FgAbelianGroup{1, {mpz_class(10)}});

    FormProductReport r345 = analyze_form_product(FormProductScenario({3, 4, 5}));
    CHECK(r345.factors == expected_factors(12, 3));
    CHECK(*r345.index == 1);
}

TEST_CASE("form product analysis, common factor") {
    FormProductReport r22 = analyze_form_product(FormProductScenario({2, 2}));
    CHECK(r22.factors == std::vector<mpz_class>{mpz_class(2), mpz_class(0)});
    CHECK(!r22.applicable);
    CHECK(r22.degree_gcd == 2);
    CHECK(!r22.boundary.has_value());
    CHECK_THROWS_AS(form_product_presentation(FormProductScenario({2, 2})),
                    std::invalid_argument);
}

TEST_CASE("invariant factors across coprime degree tuples") {
    for (std::vector<unsigned long> degs :
         {std::vector<unsigned long>{1, 2}, {2, 3}, {2, 3, 5}, {3, 4, 5}, {1, 1, 1, 1}}) {
        FormProductScenario s(degs);
        FormProductReport rep = analyze_form_product(s);
        CHECK(rep.factors == expected_factors(s.n(), s.r()));
    }
}

TEST_CASE("genus of a prime cyclic branched curve") {
    CHECK(genus_rh(2, 4) == 1);
    CHECK(genus_rh(3, 3) == 1);
    CHECK(genus_rh(2, 6) == 2);
    CHECK(genus_rh(5, 10) == 16);
    CHECK_THROWS_AS(genus_rh(2, 3), std::invalid_argument); // p does not divide n
    CHECK_THROWS_AS(genus_rh(2, 2), std::invalid_argument); // n below 3
    CHECK_THROWS_AS(genus_rh(4, 8), std::invalid_argument); // not prime
}

TEST_CASE("fermat curve unit rank") {
    CHECK(fermat_unit_rank(2) == 5);
    CHECK(fermat_unit_rank(3) == 8);
    for (unsigned long n : {2ul, 3ul, 4ul})
        CHECK(fermat_unit_rank(n) == unit_lattice(fermat_presentation(n)).rank);
}

TEST_CASE("trivial-action cohomology table") {
    CohomologyTable t = prop_2_1_table(2, 2);
    CHECK(t.h0 == FgAbelianGroup::free(2));
    CHECK(t.h_odd.is_trivial());
    CHECK(t.h_even == FgAbelianGroup{0, {mpz_class(2), mpz_class(2)}});

    CohomologyTable one = prop_2_1_table(5, 1);
    CHECK(one.h_even == FgAbelianGroup::cyclic(5));

    CohomologyTable n1 = prop_2_1_table(1, 3);
    CHECK(n1.h_odd.is_trivial());
    CHECK(n1.h_even.is_trivial());
}

TEST_CASE("coprime boundary table") {
    RamifiedBoundaryReport r = prop_3_9_table(3, 2);
    CHECK(r.unit_rank == 2);
    CHECK(r.h1_mu == FgAbelianGroup{0, {mpz_class(2), mpz_class(2)}});

    CHECK(prop_3_9_table(1, 4).unit_rank == 0);
    CHECK(prop_3_9_table(1, 4).h1_mu.is_trivial());

    RamifiedBoundaryReport r46 = prop_3_9_table(4, 6);
    CHECK(r46.h1_mu == FgAbelianGroup{0, {mpz_class(6), mpz_class(6), mpz_class(6)}});
}

TEST_CASE("irreducible ramification table") {
    IrreducibleCoverTable t3 = theorem_2_8_table(3);
    CHECK(t3.t_odd == FgAbelianGroup::cyclic(3));
    CHECK(t3.t_even.is_trivial());
    CHECK(theorem_2_8_table(2).t_odd == FgAbelianGroup::cyclic(2));
    for (unsigned long n : {2ul, 4ul, 6ul}) CHECK(theorem_2_8_table(n).t_even.is_trivial());
}
