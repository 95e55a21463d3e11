#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "polarfix/polarity.hpp"
#include "polarfix/sets.hpp"
#include "polarfix/verify.hpp"

namespace polarfix {

/* Constructive solvers for C = (GC)0 and the supporting diagnostics. */

/* Positive definite G: the unique solution {x : <Gx,x> <= 1}, returned in the
 * tightest representation (interval in 1D, ball for scalar G, ellipsoid
 * otherwise).  Throws NotPositiveDefinite. */
ConvexSet solve_positive_definite(const Operator& g);

/* Symmetric invertible G with any sign pattern: builds A = U |D| U^T from the
 * spectral decomposition, so that A = G A^{-1} G^*, and returns (A, the
 * ellipsoid of A). */
std::pair<Matrix, ConvexSet> solve_symmetric(const Operator& g);

/* ||A - G A^{-1} G^*|| in operator norm. */
double operator_equation_residual(const Matrix& a, const Operator& g);

/* ||(A^{-1})^* G A^{-1} - G||.  Zero means A transports solutions of G's
 * equation to solutions. */
double transport_residual(const Operator& a, const Operator& g);

/* The transported set A C. */
ConvexSet transport_solution(const Operator& a, const ConvexSet& c);

/* Complete answer for the scalar equation in dimension one.  gamma > 0 has
 * the single symmetric interval; gamma < 0 an interval family plus the two
 * rays.  gamma = 0 is rejected (ZeroGamma). */
struct OneDimSolutionFamily {
  double gamma = 0.0;
  std::optional<Interval> unique;  // gamma > 0 only
  bool has_family = false;         // gamma < 0: members below plus two rays

  /* [1/(gamma b), b] for b > 0; only meaningful when has_family. */
  Interval family_member(double b) const;
  std::array<Interval, 2> rays() const;
};

OneDimSolutionFamily classify_1d(double gamma);

/* 2x2 normal form M = B [[0, a2], [-a1, 0]] B^T with orthonormal columns
 * B = [u, u_perp], 0 < a1 < a2.  u_perp is the quarter turn of u, possibly
 * reflected: the sign of the skew part of M decides the handedness.  Derived
 * matrices come pre-multiplied for the functional-equation route. */
struct SemiSkewForm {
  Vector u;
  Vector u_perp;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  Matrix e;              // reconstruction
  Matrix e_adjoint;      // normal form for (-a2, -a1)
  Matrix e_inverse;      // normal form for (-1/a2, -1/a1)
  Matrix e_inv_adjoint;  // E^{-1} E^*: diag(-a2/a1, -a1/a2) in the u frame
};

/* Throws NotSemiSkew with the failing condition: trace above tol, determinant
 * not positive, or the scaled-rotation degenerate case a1 = a2. */
SemiSkewForm semi_skew_decompose(const Matrix& m, double tol = 1e-9);

struct IterationTrace {
  enum class Verdict { converged, cycled, no_fixed_point_within_budget };

  std::vector<ConvexSet> iterates;          // C_0 .. C_K
  std::vector<double> self_residuals;       // residual(C_k, T C_k)
  std::vector<double> consecutive_residuals;  // residual(C_k, C_{k-1}), from k=1
  Verdict verdict = Verdict::no_fixed_point_within_budget;
  int converged_step = -1;
  int cycle_period = 0;
  double min_self_residual = 0.0;
};

/* Iterates C <- polarity_map(G, C), stopping on a self residual below tol,
 * a short cycle (period up to 4), or the step budget. */
IterationTrace iterate_polarity(const Operator& g, const ConvexSet& c0, int max_steps,
                                double tol, const VerifyConfig& config = {});

}  // namespace polarfix
