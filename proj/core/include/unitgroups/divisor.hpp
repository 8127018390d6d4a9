#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unitgroups/abelian.hpp"
#include "unitgroups/int_matrix.hpp"

namespace unitgroups {

/// Boundary-divisor presentation of an affine variety: r prime divisors at
/// infinity, a presented receiving group (the class group of the completion,
/// or a declared quotient that contains the image faithfully), and the map
/// chi sending each boundary divisor to its class.
///
/// The receiving group is user-supplied; the `justification` string records
/// why the chosen presentation is faithful for the scenario at hand.
struct NagataPresentation {
    std::size_t boundary_count = 0; ///< r
    Presentation class_target;
    IntMatrix chi; ///< target generators x r
    std::string justification;

    NagataPresentation() = default;
    NagataPresentation(std::size_t r, Presentation target, IntMatrix chi_map,
                       std::string why = "");
};

struct UnitLattice {
    IntMatrix basis; ///< r x rank, columns are boundary divisors of units
    std::size_t rank = 0;
};

/// Kernel of chi into the presented target: the lattice of boundary divisors
/// of units, i.e. the group of units modulo scalars.  The basis generates the
/// whole kernel (not a finite-index sublattice).
UnitLattice unit_lattice(const NagataPresentation& p);

/// Class group of the affine variety: cokernel of chi in the target.
FgAbelianGroup class_cokernel(const NagataPresentation& p);

/// The image of chi: subgroup of the target generated by the boundary
/// divisor classes.
FgAbelianGroup boundary_subgroup(const NagataPresentation& p);

/// Candidate units, one boundary-divisor column per candidate.
struct CandidateUnits {
    IntMatrix divisors; ///< r x s
    std::vector<std::string> labels;
};

/// Index [ker(chi) : span(candidates)].  Value 1 certifies that the
/// candidates are a basis of the unit group mod scalars; a finite value
/// certifies finite index; nullopt (infinite) signals rank deficiency.
/// Throws if a candidate column is not a unit divisor, naming the column and
/// its residue under chi.
std::optional<mpz_class> candidate_index(const CandidateUnits& c, const NagataPresentation& p);

/// Free rank of the unit group predicted by exactness from the boundary
/// subgroup: r - free_rank(H).
std::size_t unit_rank_from_boundary(std::size_t boundary_count, const FgAbelianGroup& h);

enum class UnitDichotomy {
    UnitsTrivial, ///< units are scalars only; H is free of rank p
    RankPMinus1,  ///< units mod scalars free of rank p-1; H is Z extended by a finite group
};

/// The two possibilities for a degree-p cover with p boundary divisors,
/// decided from the structure of the boundary subgroup H.  Any H whose shape
/// fits neither branch is rejected.
UnitDichotomy theorem_3_3_classify(unsigned long p, const FgAbelianGroup& h);

bool is_prime(unsigned long n);

} // namespace unitgroups
