#pragma once

#include <vector>

#include "polarfix/matrix.hpp"

namespace polarfix {

struct LpResult {
  double value = 0.0;
  Vector x;
};

/* max <c,x> subject to <rows[i], x> <= 1, x free.  Dense tableau simplex with
 * Bland's rule; the all-slack basis is feasible so no phase 1 is needed.
 * Throws UnboundedLp on an unbounded ray. */
LpResult maximize_under_unit_rows(const Vector& c, const std::vector<Vector>& rows);

/* Phase-1 optimum of  min sum(artificials)  s.t.  sum_i lambda_i g_i = x,
 * lambda >= 0.  Zero (within tolerance) means x lies in the generated cone;
 * the value grows with the l1 infeasibility otherwise. */
double cone_infeasibility(const Vector& x, const std::vector<Vector>& generators);

}  // namespace polarfix
