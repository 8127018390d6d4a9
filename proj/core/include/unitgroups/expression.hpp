#pragma once

#include <string>
#include <vector>

#include "unitgroups/cover_ring.hpp"
#include "unitgroups/multipoly.hpp"

namespace unitgroups {

/// Human-readable polynomial syntax: identifiers from `names` (plus `zeta`),
/// integer and a/b rational literals, + - * / ^ and parentheses, with `/`
/// restricted to division by a nonzero constant.  Example:
/// "z^2 - (x*y-1)*(x*y+1)".
MultiPoly parse_polynomial(const std::string& src, const std::vector<std::string>& names,
                           unsigned long conductor);

/// Same syntax with `z` naming the ring generator.
CoverElement parse_cover_element(const std::string& src, const CoverRingPtr& ring);

} // namespace unitgroups
