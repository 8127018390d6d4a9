#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unitgroups/covers.hpp>
#include <unitgroups/divisor.hpp>
#include <unitgroups/normal_form.hpp>

#include "generators.hpp"

using namespace unitgroups;
using testgen::Rng;

namespace {

NagataPresentation degree_map(long d) {
    IntMatrix chi(1, 1);
    chi(0, 0) = d;
    return NagataPresentation(1, Presentation(1, IntMatrix(1, 0)), chi,
                              "complement of a degree-d hypersurface in projective space");
}

NagataPresentation all_ones(std::size_t r) {
    IntMatrix chi(1, r);
    for (std::size_t j = 0; j < r; ++j) chi(0, j) = 1;
    return NagataPresentation(r, Presentation(1, IntMatrix(1, 0)), chi, "degree map");
}

// cubic curve cut by three pairwise nonparallel lines: target generated by
// one boundary point and one order-3 difference class
NagataPresentation plane_cubic() {
    IntMatrix rel(2, 1);
    rel(1, 0) = 3;
    IntMatrix chi{{1, 1, 1}, {1, 2, 0}};
    return NagataPresentation(3, Presentation(2, rel), chi,
                              "free part generated by one boundary point; the difference of two "
                              "boundary points has order three because the completion has genus "
                              "one");
}

CandidateUnits cubic_candidates() {
    CandidateUnits c;
    c.divisors = IntMatrix{{2, -1}, {-1, 2}, {-1, -1}};
    c.labels = {"f1", "f2"};
    return c;
}

} // namespace

TEST_CASE("unit lattice ranks") {
    CHECK(unit_lattice(degree_map(3)).rank == 0);
    CHECK(unit_lattice(all_ones(5)).rank == 4);

    IntMatrix zero_chi(1, 4);
    NagataPresentation zero(4, Presentation(1, IntMatrix(1, 0)), zero_chi, "zero map");
    CHECK(unit_lattice(zero).rank == 4);
}

TEST_CASE("class cokernel") {
    CHECK(class_cokernel(degree_map(4)) == FgAbelianGroup::cyclic(4));
    CHECK(class_cokernel(all_ones(3)).is_trivial());

    IntMatrix zero_chi(1, 2);
    NagataPresentation zero(2, Presentation(1, IntMatrix(1, 0)), zero_chi, "zero map");
    CHECK(class_cokernel(zero) == FgAbelianGroup::free(1));
}

TEST_CASE("boundary subgroup") {
    NagataPresentation cubic = plane_cubic();
    CHECK(boundary_subgroup(cubic) == FgAbelianGroup{1, {mpz_class(3)}});

    NagataPresentation ident(3, Presentation(3, IntMatrix(3, 0)), IntMatrix::identity(3),
                             "identity");
    CHECK(boundary_subgroup(ident) == FgAbelianGroup::free(3));

    AssembledFormProduct a = form_product_presentation(FormProductScenario({2, 3, 5}));
    CHECK(boundary_subgroup(a.presentation) == FgAbelianGroup{1, {mpz_class(10)}});
}

TEST_CASE("plane cubic units and index") {
    NagataPresentation cubic = plane_cubic();
    CHECK(unit_lattice(cubic).rank == 2);
    auto idx = candidate_index(cubic_candidates(), cubic);
    REQUIRE(idx.has_value());
    CHECK(*idx == 1);
    CHECK(class_cokernel(cubic).is_trivial());
}

TEST_CASE("candidate index verdicts") {
    AssembledFormProduct a = form_product_presentation(FormProductScenario({1, 1, 1}));
    auto idx = candidate_index(a.candidates, a.presentation);
    REQUIRE(idx.has_value());
    CHECK(*idx == 1);

    // a single candidate in a rank-2 kernel
    CandidateUnits single;
    single.divisors = a.candidates.divisors.col_slice(0, 1);
    CHECK(!candidate_index(single, a.presentation).has_value());

    // a non-unit divisor is rejected with the offending column named
    CandidateUnits bad;
    bad.divisors = IntMatrix{{1}, {0}, {0}};
    bad.labels = {"L1"};
    CHECK_THROWS_WITH_AS(candidate_index(bad, a.presentation),
                         doctest::Contains("column 0"), std::invalid_argument);
}

TEST_CASE("candidate index is invariant under unimodular recombination") {
    Rng rng(31);
    NagataPresentation cubic = plane_cubic();
    CandidateUnits base = cubic_candidates();
    for (int t = 0; t < 10; ++t) {
        testgen::Unimodular w = testgen::random_unimodular(rng, 2);
        CandidateUnits mixed;
        mixed.divisors = base.divisors * w.p;
        CHECK(candidate_index(mixed, cubic) == candidate_index(base, cubic));
    }
}

TEST_CASE("exactness bookkeeping on random presentations") {
    Rng rng(77);
    for (int t = 0; t < 40; ++t) {
        std::size_t g = 1 + t % 3, r = 1 + (t * 3) % 4, k = t % 3;
        IntMatrix chi = testgen::random_matrix(rng, g, r, -5, 5);
        IntMatrix rel = testgen::random_matrix(rng, g, k, -5, 5);
        NagataPresentation p(r, Presentation(g, rel), chi, "random");
        CHECK(unit_lattice(p).rank + boundary_subgroup(p).free_rank == r);
    }
}

TEST_CASE("degree-p cover dichotomy") {
    CHECK(theorem_3_3_classify(5, FgAbelianGroup::free(5)) == UnitDichotomy::UnitsTrivial);
    CHECK(theorem_3_3_classify(3, FgAbelianGroup{1, {mpz_class(9)}}) ==
          UnitDichotomy::RankPMinus1);
    CHECK(theorem_3_3_classify(2, FgAbelianGroup::free(1)) == UnitDichotomy::RankPMinus1);
    CHECK_THROWS_AS(theorem_3_3_classify(5, FgAbelianGroup::free(2)), std::invalid_argument);
    CHECK_THROWS_AS(theorem_3_3_classify(3, FgAbelianGroup{3, {mpz_class(2)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(theorem_3_3_classify(4, FgAbelianGroup::free(4)), std::invalid_argument);
}

TEST_CASE("dichotomy matches engine ranks on both branches") {
    // trivial-unit branch: boundary classes independent in the target
    NagataPresentation ident(3, Presentation(3, IntMatrix(3, 0)), IntMatrix::identity(3),
                             "independent boundary classes");
    FgAbelianGroup h_free = boundary_subgroup(ident);
    CHECK(theorem_3_3_classify(3, h_free) == UnitDichotomy::UnitsTrivial);
    CHECK(unit_lattice(ident).rank == 0);

    // large-unit branch: cubic configuration with p = 3
    NagataPresentation cubic = plane_cubic();
    FgAbelianGroup h = boundary_subgroup(cubic);
    CHECK(theorem_3_3_classify(3, h) == UnitDichotomy::RankPMinus1);
    CHECK(unit_lattice(cubic).rank == 2);
}

TEST_CASE("fixed part of the unit lattice under a cyclic boundary permutation") {
    // three boundary points permuted cyclically; the units sit inside the
    // degree-zero part and carry the permutation action
    NagataPresentation p = all_ones(3);
    IntMatrix basis = unit_lattice(p).basis;
    REQUIRE(basis.cols() == 2);
    IntMatrix perm(3, 3);
    perm(1, 0) = 1;
    perm(2, 1) = 1;
    perm(0, 2) = 1;
    IntMatrix image = perm * basis;
    LinearSolver solver(basis);
    std::vector<std::vector<mpz_class>> cols;
    for (std::size_t j = 0; j < image.cols(); ++j) {
        auto x = solver.solve_integer(image.column(j));
        REQUIRE(x.has_value());
        cols.push_back(*x);
    }
    IntMatrix induced = IntMatrix::from_columns(2, cols);
    CyclicGModule m(3, Presentation(2, IntMatrix(2, 0)), induced);
    CHECK(fixed_submodule(m).is_trivial());
}
