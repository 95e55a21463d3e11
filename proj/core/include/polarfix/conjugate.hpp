#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <vector>

#include "polarfix/matrix.hpp"
#include "polarfix/polarity.hpp"
#include "polarfix/sets.hpp"

namespace polarfix {

/* Grid-based convex conjugation plus the closed forms it is checked against. */

struct GridSpec {
  std::vector<std::array<double, 2>> box;  // per-axis [lo, hi]
  std::vector<int> resolution;             // nodes per axis, >= 9

  int dim() const { return static_cast<int>(box.size()); }
  double step(int axis) const;
  double spacing() const;  // max per-axis step, the h in all 5h tolerances
  long node_count() const;
  double coord(int axis, int idx) const;
  void validate() const;  // 1 or 2 axes, lo < 0 < hi, resolution >= 9

  static GridSpec centered(double half_width, int nodes, int dims);
};

struct GridFunction {
  GridSpec grid;
  std::vector<double> values;          // row-major, axis 0 slowest
  std::vector<std::uint8_t> reliable;  // empty means every node is reliable

  double value(int i0) const { return values[i0]; }
  double value(int i0, int i1) const {
    return values[static_cast<long>(i0) * grid.resolution[1] + i1];
  }
  bool node_reliable(long flat) const {
    return reliable.empty() || reliable[flat] != 0;
  }

  /* Multilinear interpolation; empty outside the box. */
  std::optional<double> interpolate(const Vector& x) const;
  /* Same, but empty when any supporting corner node is unreliable. */
  std::optional<double> interpolate_reliable(const Vector& x) const;
};

GridFunction sample_grid(const GridSpec& spec,
                         const std::function<double(const Vector&)>& f);

/* Discrete conjugate sup_x <y,x> - f(x) over grid nodes, evaluated on a dual
 * grid sized from the sampled slopes (0.8 of the largest finite-difference
 * slope per axis, so dual argmaxes stay interior).  A dual node is marked
 * reliable when its argmax is strictly inside the primal box; suprema that
 * touch the boundary may be truncated and are flagged instead of trusted. */
GridFunction legendre_grid(const GridFunction& f);

/* (1/2)<A^{-1} x*, x*>, the conjugate of the quadratic (1/2)<Ax,x>. */
double quadratic_conjugate(const Matrix& a, const Vector& xstar);

/* Conjugate of gauge(C,.)^p / p at x*: support(C,x*)^q / q with 1/p + 1/q = 1. */
double gauge_power_conjugate(const ConvexSet& c, double p, const Vector& xstar);

/* Builds f = (1/2) gauge(C,.)^2 on the grid and returns
 * sup |f(x) - f*(G^T x)| over nodes whose composed dual point lands inside
 * the dual box on reliable nodes.  Small exactly when C solves C = (GC)0. */
double fixedpoint_function_residual(const ConvexSet& c, const Operator& g,
                                    const GridSpec& grid);

/* sup |f(x) - f(E^{-1} E^T x)| over nodes; composed points outside the box
 * are excluded rather than extrapolated. */
double functional_equation_residual(const GridFunction& f, const Operator& e);

struct CoercivityReport {
  double beta = 0.0;        // largest c with <Ax,x> >= c |x|^2
  Vector attained_at;       // minimal unit eigenvector
  double sampled_min = 0.0;  // min of <Au,u> over sampled unit u
};

CoercivityReport coercivity_check(const Matrix& a, int samples);

/* Node coordinates then value, one row per node. */
void write_grid_csv(const GridFunction& f, std::ostream& out);

}  // namespace polarfix
