#include "polarfix/verify.hpp"

#include <cmath>
#include <limits>

#include "polarfix/errors.hpp"
#include "polarfix/lp.hpp"
#include "polarfix/sampling.hpp"

namespace polarfix {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int common_dim(const ConvexSet& c, const ConvexSet& d) {
  int dc = dim(c), dd = dim(d);
  if (dc != 0 && dd != 0 && dc != dd)
    throw DimensionMismatch("residual: sets live in different dimensions");
  int n = dc != 0 ? dc : dd;
  return n != 0 ? n : 2;  // two balls: any dimension gives the same answer
}

/* |a - b| with matching infinities counting as agreement. */
double ext_gap(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return a == b ? 0.0 : kInf;
  return std::fabs(a - b);
}

bool zero_membership(const ConvexSet& c) {
  return contains(c, zero_vector(std::max(1, dim(c))), 0.0);
}

/* True when u sits within `margin` of the cone's boundary.  Closed-form cones
 * probe by flipping the membership slack both ways.  V-cones have no shrunken
 * membership test, so only the outside approach is measured there: interior
 * points report LP infeasibility exactly 0 and near-boundary outside points a
 * value on the order of their distance. */
bool boundary_ambiguous(const ConvexSet& c, const Vector& u, double margin) {
  if (const ConeV* k = std::get_if<ConeV>(&c)) {
    double un = norm(u);
    if (un == 0.0) return false;
    double infeas = cone_infeasibility(scaled(u, 1.0 / un), k->generators);
    return infeas > 1e-13 && infeas <= margin;
  }
  return contains(c, u, margin) != contains(c, u, -margin);
}

}  // namespace

const char* residual_kind_name(ResidualKind k) {
  switch (k) {
    case ResidualKind::support: return "support";
    case ResidualKind::gauge: return "gauge";
    case ResidualKind::cone_membership: return "cone_membership";
  }
  return "support";
}

ResidualReport support_residual(const ConvexSet& c, const ConvexSet& d, int dirs, int seed,
                                double tolerance) {
  if (!classify(c).bounded || !classify(d).bounded)
    throw UnboundedSet("support_residual: both sets must be bounded");
  if (dirs < 1) throw BadParams("support_residual: need at least one direction");
  int n = common_dim(c, d);

  ResidualReport rep;
  rep.kind = ResidualKind::support;
  rep.dirs = dirs;
  rep.tolerance = tolerance;
  rep.zero_in_set = zero_membership(c);
  rep.argmax = zero_vector(n);
  for (int k = 0; k < dirs; ++k) {
    Vector u = sphere_direction(n, k, seed);
    double gap = ext_gap(support(c, u), support(d, u));
    if (gap > rep.max_residual) {
      rep.max_residual = gap;
      rep.argmax = u;
    }
  }
  rep.pass = rep.max_residual <= tolerance;
  return rep;
}

ResidualReport cone_residual(const ConvexSet& c, const ConvexSet& d, int dirs, int seed,
                             double margin) {
  if (!classify(c).cone || !classify(d).cone)
    throw NotACone("cone_residual: both sets must be cones");
  if (dirs < 1) throw BadParams("cone_residual: need at least one direction");
  int n = common_dim(c, d);

  ResidualReport rep;
  rep.kind = ResidualKind::cone_membership;
  rep.dirs = dirs;
  rep.tolerance = margin;
  rep.zero_in_set = zero_membership(c);
  rep.argmax = zero_vector(n);

  for (int k = 0; k < dirs; ++k) {
    Vector u = sphere_direction(n, k, seed);
    if (boundary_ambiguous(c, u, margin) || boundary_ambiguous(d, u, margin)) {
      ++rep.excluded;
      continue;
    }
    if (contains(c, u, 0.0) != contains(d, u, 0.0)) {
      if (rep.disagreements == 0) rep.argmax = u;
      ++rep.disagreements;
    }
  }
  rep.max_residual = rep.disagreements;
  rep.pass = rep.disagreements == 0;
  return rep;
}

namespace {

ResidualReport interval_exact(const Interval& c, const ConvexSet& image, double tolerance) {
  const Interval* d = std::get_if<Interval>(&image);
  if (d == nullptr) throw UnsupportedRepresentation("verify: interval image not an interval");
  ResidualReport rep;
  rep.kind = ResidualKind::support;
  rep.dirs = 2;
  rep.tolerance = tolerance;
  rep.zero_in_set = c.lo <= 0.0 && 0.0 <= c.hi;
  /* Endpoint gaps are the support gaps in the only two directions. */
  double gap_hi = ext_gap(c.hi, d->hi);
  double gap_lo = ext_gap(c.lo, d->lo);
  rep.max_residual = std::max(gap_hi, gap_lo);
  rep.argmax = Vector{gap_hi >= gap_lo ? 1.0 : -1.0};
  rep.pass = rep.max_residual <= tolerance;
  return rep;
}

}  // namespace

ResidualReport verify_fixed_point(const Operator& g, const ConvexSet& c,
                                  const VerifyConfig& config) {
  validate(c);
  ConvexSet image = polarity_map(g, c);
  if (const Interval* iv = std::get_if<Interval>(&c))
    return interval_exact(*iv, image, config.tolerance);
  SetClass cls = classify(c);
  if (cls.cone) return cone_residual(c, image, config.dirs, config.seed, config.cone_margin);
  if (cls.bounded)
    return support_residual(c, image, config.dirs, config.seed, config.tolerance);
  throw UnsupportedRepresentation("verify: set is neither bounded, a cone, nor an interval");
}

}  // namespace polarfix
