#pragma once

#include <nlohmann/json.hpp>

#include "unitgroups/abelian.hpp"
#include "unitgroups/cohomology.hpp"
#include "unitgroups/cover_ring.hpp"
#include "unitgroups/divisor.hpp"
#include "unitgroups/int_matrix.hpp"
#include "unitgroups/multipoly.hpp"

namespace unitgroups {

/// JSON conventions: arbitrary-precision integers and rationals travel as
/// decimal strings; structural counts (rows, rank, n, ...) as JSON numbers.
/// Key order is fixed so identical inputs give byte-identical output.
using json = nlohmann::ordered_json;

json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

json to_json(const FgAbelianGroup& g);
FgAbelianGroup group_from_json(const json& j);

json to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);

json to_json(const CyclicGModule& m);
CyclicGModule module_from_json(const json& j);

json to_json(const NagataPresentation& p);
NagataPresentation nagata_from_json(const json& j);

json to_json(const CycNumber& c);
CycNumber cyc_from_json(const json& j, unsigned long conductor);

json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const json& j, std::size_t nvars, unsigned long conductor);

/// Ring document: {"variables": [...], "n": ..., "f": expr, "factors": [expr, ...]}.
CoverRingPtr ring_from_json(const json& j);
json to_json(const CoverRing& ring);

json to_json(const CoverElement& e);

mpz_class mpz_from_json(const json& j);
mpq_class mpq_from_json(const json& j);
std::string mpq_to_string(const mpq_class& q);

} // namespace unitgroups
