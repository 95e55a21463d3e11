#pragma once

#include <string>

#include "polarfix/polarity.hpp"
#include "polarfix/sets.hpp"

namespace polarfix {

enum class ResidualKind { support, gauge, cone_membership };

/* A pass verdict is "no violation found at this direction resolution", not a
 * proof; reports carry the note verbatim so downstream readers see the
 * asymmetry. */
struct ResidualReport {
  ResidualKind kind = ResidualKind::support;
  int dirs = 0;
  double max_residual = 0.0;
  Vector argmax;
  bool pass = false;
  double tolerance = 0.0;
  bool zero_in_set = false;
  int disagreements = 0;  // cone kind only
  int excluded = 0;       // cone kind only: near-boundary directions skipped
};

struct VerifyConfig {
  double tolerance = 1e-8;
  int dirs = 512;
  int seed = 0;
  double cone_margin = 1e-9;
};

/* max |h_C - h_D| over the seeded direction set.  Both sets must be bounded
 * (UnboundedSet otherwise).  The sampled max is a lower bound on the true
 * sup, and never decreases when dirs doubles. */
ResidualReport support_residual(const ConvexSet& c, const ConvexSet& d, int dirs, int seed,
                                double tolerance = 1e-8);

/* Membership agreement between two cones on sampled unit directions;
 * directions within `margin` of either boundary are excluded rather than
 * counted.  max_residual reports the disagreement count. */
ResidualReport cone_residual(const ConvexSet& c, const ConvexSet& d, int dirs, int seed,
                             double margin = 1e-9);

/* Compares C with its image under the polarity map of G, routing bounded
 * sets through support sampling, cones through membership agreement, and
 * intervals through exact endpoint arithmetic. */
ResidualReport verify_fixed_point(const Operator& g, const ConvexSet& c,
                                  const VerifyConfig& config = {});

const char* residual_kind_name(ResidualKind k);

}  // namespace polarfix
