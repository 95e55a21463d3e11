#pragma once

#include "polarfix/matrix.hpp"

namespace polarfix {

/* Unit direction number `index` of the seeded sequence for the given
 * dimension.  The sequence is nested: entry k never depends on how many
 * directions will be drawn, so doubling the count only appends.  Directions
 * come in antipodal pairs (odd indices mirror the preceding even one).
 * 2D uses a golden-angle wheel, 3D a golden-angle spiral with van der Corput
 * stratification in z, higher dimensions normalized seeded gaussians. */
Vector sphere_direction(int dim, int index, int seed);

}  // namespace polarfix
