#include "unitgroups/divisor.hpp"

#include <sstream>
#include <stdexcept>

#include "unitgroups/normal_form.hpp"

namespace unitgroups {

NagataPresentation::NagataPresentation(std::size_t r, Presentation target, IntMatrix chi_map,
                                       std::string why)
    : boundary_count(r), class_target(std::move(target)), chi(std::move(chi_map)),
      justification(std::move(why)) {
    if (chi.cols() != boundary_count)
        throw std::invalid_argument("NagataPresentation: chi needs one column per boundary divisor");
    if (chi.rows() != class_target.generators)
        throw std::invalid_argument("NagataPresentation: chi rows must match target generators");
}

UnitLattice unit_lattice(const NagataPresentation& p) {
    IntMatrix basis = preimage_lattice(p.chi, p.class_target.relations);
    return UnitLattice{basis, basis.cols()};
}

FgAbelianGroup class_cokernel(const NagataPresentation& p) {
    return cokernel(IntMatrix::concat_cols(p.chi, p.class_target.relations));
}

FgAbelianGroup boundary_subgroup(const NagataPresentation& p) {
    IntMatrix image = IntMatrix::concat_cols(p.chi, p.class_target.relations);
    return quotient_group(image, p.class_target.relations);
}

std::optional<mpz_class> candidate_index(const CandidateUnits& c, const NagataPresentation& p) {
    if (c.divisors.rows() != p.boundary_count)
        throw std::invalid_argument("candidate_index: divisor rows must equal boundary count");
    LinearSolver rel(p.class_target.relations);
    for (std::size_t j = 0; j < c.divisors.cols(); ++j) {
        std::vector<mpz_class> image = p.chi.apply(c.divisors.column(j));
        if (!rel.solve_integer(image)) {
            std::ostringstream os;
            os << "candidate_index: column " << j;
            if (j < c.labels.size()) os << " (" << c.labels[j] << ")";
            os << " is not a unit divisor; chi maps it to (";
            for (std::size_t i = 0; i < image.size(); ++i) {
                if (i) os << ", ";
                os << image[i];
            }
            os << "), nonzero in the target";
            throw std::invalid_argument(os.str());
        }
    }
    UnitLattice k = unit_lattice(p);
    return lattice_index(c.divisors, k.basis);
}

std::size_t unit_rank_from_boundary(std::size_t boundary_count, const FgAbelianGroup& h) {
    if (h.free_rank > boundary_count)
        throw std::invalid_argument("unit_rank_from_boundary: H rank exceeds boundary count");
    return boundary_count - h.free_rank;
}

UnitDichotomy theorem_3_3_classify(unsigned long p, const FgAbelianGroup& h) {
    if (!is_prime(p)) throw std::invalid_argument("theorem_3_3_classify: p must be prime");
    if (h.free_rank == p) {
        if (!h.torsion.empty())
            throw std::invalid_argument(
                "theorem_3_3_classify: H has full rank but torsion, outside the dichotomy");
        return UnitDichotomy::UnitsTrivial;
    }
    if (h.free_rank == 1) return UnitDichotomy::RankPMinus1;
    throw std::invalid_argument("theorem_3_3_classify: free rank of H must be 1 or p, got " +
                                std::to_string(h.free_rank));
}

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace unitgroups
