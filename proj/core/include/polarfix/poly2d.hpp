#pragma once

#include <vector>

#include "polarfix/linalg.hpp"
#include "polarfix/matrix.hpp"

namespace polarfix {

/* Planar helpers used for SVG rendering, exact 2D radii, and the V/H
 * conversions that only exist in closed form in the plane. */

/* Convex hull of 2D points, counterclockwise, collinear points dropped. */
std::vector<Vector> convex_hull_2d(std::vector<Vector> pts);

/* Vertices of {x in R^2 : <a_i,x> <= 1}, counterclockwise.  Throws
 * UnboundedLp when the region is unbounded. */
std::vector<Vector> h_vertices_2d(const HPolyData& h);

/* Facet rows a_i with <a_i,x> <= 1 describing the hull of a 2D point set
 * whose interior contains 0. */
HPolyData v_facets_2d(const std::vector<Vector>& vertices);

}  // namespace polarfix
