#pragma once

#include <string>
#include <vector>

#include "polarfix/sets.hpp"

namespace polarfix {

/* Boundary overlay of planar sets in the fixed frame [-3,3]^2 (1D intervals
 * draw on the axis).  Colors cycle through a small palette in input order.
 * Throws UnsupportedRepresentation for sets that are neither 1D nor 2D. */
std::string render_svg(const std::vector<ConvexSet>& sets);

}  // namespace polarfix
