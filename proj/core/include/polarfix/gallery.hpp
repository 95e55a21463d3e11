#pragma once

#include <map>
#include <string>
#include <vector>

#include "polarfix/polarity.hpp"
#include "polarfix/sets.hpp"

namespace polarfix {

/* Catalog of worked fixed-point configurations, each a (G, sets) bundle with
 * the verdict every set should earn.  Doubles as CLI gallery and golden-test
 * input. */

struct GalleryEntry {
  std::string name;
  std::map<std::string, double> params;  // resolved values, defaults filled in
  Operator g;
  std::vector<ConvexSet> sets;
  std::vector<bool> expected_pass;  // aligned with sets
  std::string citation;             // one-line mathematical description
};

/* Known names: lorentz, orthant, simplex, ellipse_family, ellipse_family_2n,
 * square_rhombus_disc, rotation_invariance, one_d, f_b,
 * unbounded_ellipsoid_demo, semi_skew_nonexistence.
 * Unrecognized params are rejected, missing ones take entry defaults.
 * Throws UnknownEntry / BadParams. */
GalleryEntry gallery(const std::string& name,
                     const std::map<std::string, double>& params = {});

std::vector<std::string> gallery_names();

/* Regular simplex: n+1 vertices in R^n, centroid 0, common norm r, pairwise
 * inner products -r^2/n.  Built by lifting the construction one dimension at
 * a time. */
std::vector<Vector> simplex_vertices(int n, double r);

/* Witness norms 1/sqrt(lambda_k) = sqrt(k) for the ellipsoid of
 * A = diag(1, 1/2, ..., 1/n): the finite shadow of the fact that without
 * invertibility of A the ellipsoid need not be bounded. */
struct UnboundedEllipsoidReport {
  int n = 0;
  Vector witness_norms;  // k-th entry sqrt(k+1)
  double max_norm = 0.0;
};

UnboundedEllipsoidReport unbounded_ellipsoid_demo(int n);

}  // namespace polarfix
