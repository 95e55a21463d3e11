#pragma once

#include <variant>
#include <vector>

#include "polarfix/linalg.hpp"
#include "polarfix/matrix.hpp"

namespace polarfix {

/* Closed convex sets in finite dimension, each carried as the representation
 * its closed forms want.  Bodies (ball, ellipsoid, polytopes, interval with
 * finite ends) are bounded with 0 interior; the cone kinds contain 0 on their
 * boundary.  Representations are taken at face value: no hull pruning, no
 * redundancy removal. */

struct Ball {
  double radius = 1.0;  // any dimension; operations take dim from context
};

struct Ellipsoid {
  Matrix shape;  // positive definite A in {x : <Ax,x> <= 1}
};

struct PolytopeV {
  std::vector<Vector> vertices;  // hull must contain 0 in its interior
};

struct PolytopeH {
  HPolyData data;  // {x : <a_i,x> <= 1}, bounded with 0 interior
};

struct ConeV {
  std::vector<Vector> generators;  // {sum lambda_i g_i : lambda >= 0}
};

struct ConeH {
  HPolyData data;  // {x : <a_i,x> <= 0}
};

/* Circular cone of half-aperture pi/4 about a unit axis:
 * {x : <x/|x|, axis> >= 1/sqrt(2)} plus the origin. */
struct LorentzCone {
  Vector axis;
};

struct Orthant {
  std::vector<int> signs;  // entries +1 / -1; {x : signs_k x_k >= 0}
};

/* One-dimensional [lo, hi] with lo <= 0 <= hi; endpoints may be infinite. */
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

using ConvexSet = std::variant<Ball, Ellipsoid, PolytopeV, PolytopeH, ConeV, ConeH,
                               LorentzCone, Orthant, Interval>;

struct SetClass {
  bool bounded = false;
  bool zero_interior = false;
  bool cone = false;
  bool centrally_symmetric = false;
};

/* Ambient dimension; 0 for Ball, which adapts to any dimension. */
int dim(const ConvexSet& c);

/* Representation-level invariants (PD shape matrix, unit axis, sign entries,
 * ordered interval ends...).  Throws BadParams on violation. */
void validate(const ConvexSet& c);

SetClass classify(const ConvexSet& c);

/* Minkowski gauge inf{mu >= 0 : x in mu C}; +inf when no dilate reaches x. */
double gauge(const ConvexSet& c, const Vector& x);

/* Support function sup{<u,x> : x in C}; +inf off a cone's polar. */
double support(const ConvexSet& c, const Vector& u);

/* Membership with tolerance: gauge <= 1 + tol for bounded sets, normalized
 * slack tol for cones, endpoint slack for intervals. */
bool contains(const ConvexSet& c, const Vector& x, double tol);

/* max_{x in C} |x| and the largest r with B(0,r) inside C.  Exact closed
 * forms where the representation gives one (2D polytopes included via exact
 * conversion); throws UnsupportedRepresentation otherwise. */
double outer_radius(const ConvexSet& c);
double inner_radius(const ConvexSet& c);

}  // namespace polarfix
