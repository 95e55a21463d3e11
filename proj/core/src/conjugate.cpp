#include "polarfix/conjugate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "polarfix/errors.hpp"
#include "polarfix/linalg.hpp"
#include "polarfix/sampling.hpp"

namespace polarfix {

double GridSpec::step(int axis) const {
  return (box[axis][1] - box[axis][0]) / (resolution[axis] - 1);
}

double GridSpec::spacing() const {
  double h = 0.0;
  for (int j = 0; j < dim(); ++j) h = std::max(h, step(j));
  return h;
}

long GridSpec::node_count() const {
  long n = 1;
  for (int r : resolution) n *= r;
  return n;
}

double GridSpec::coord(int axis, int idx) const {
  return box[axis][0] + idx * step(axis);
}

void GridSpec::validate() const {
  if (box.empty() || box.size() > 2)
    throw BadParams("grid work is capped at two dimensions");
  if (box.size() != resolution.size())
    throw BadParams("one resolution per axis required");
  for (int j = 0; j < dim(); ++j) {
    if (!(box[j][0] < 0.0 && 0.0 < box[j][1]))
      throw BadParams("grid box must contain 0 in its interior");
    if (resolution[j] < 9) throw BadParams("need at least 9 nodes per axis");
  }
}

GridSpec GridSpec::centered(double half_width, int nodes, int dims) {
  if (!(half_width > 0.0)) throw BadParams("half width must be positive");
  GridSpec s;
  s.box.assign(dims, {-half_width, half_width});
  s.resolution.assign(dims, nodes);
  s.validate();
  return s;
}

namespace {

/* Cell locator for interpolation.  Fails outside the box (tiny slack for
 * roundoff on the boundary). */
struct CellPos {
  int cell[2] = {0, 0};
  double frac[2] = {0.0, 0.0};
};

std::optional<CellPos> locate(const GridSpec& g, const Vector& x) {
  CellPos p;
  for (int j = 0; j < g.dim(); ++j) {
    const double t = (x[j] - g.box[j][0]) / g.step(j);
    const double top = g.resolution[j] - 1.0;
    if (t < -1e-9 || t > top + 1e-9) return std::nullopt;
    int i = static_cast<int>(std::floor(t));
    i = std::clamp(i, 0, g.resolution[j] - 2);
    p.cell[j] = i;
    p.frac[j] = std::clamp(t - i, 0.0, 1.0);
  }
  return p;
}

}  // namespace

std::optional<double> GridFunction::interpolate(const Vector& x) const {
  const auto p = locate(grid, x);
  if (!p) return std::nullopt;
  if (grid.dim() == 1) {
    const int i = p->cell[0];
    return (1.0 - p->frac[0]) * values[i] + p->frac[0] * values[i + 1];
  }
  const int n1 = grid.resolution[1];
  const int i = p->cell[0], j = p->cell[1];
  const double fx = p->frac[0], fy = p->frac[1];
  const double v00 = values[static_cast<long>(i) * n1 + j];
  const double v01 = values[static_cast<long>(i) * n1 + j + 1];
  const double v10 = values[static_cast<long>(i + 1) * n1 + j];
  const double v11 = values[static_cast<long>(i + 1) * n1 + j + 1];
  return (1.0 - fx) * ((1.0 - fy) * v00 + fy * v01) +
         fx * ((1.0 - fy) * v10 + fy * v11);
}

std::optional<double> GridFunction::interpolate_reliable(const Vector& x) const {
  const auto p = locate(grid, x);
  if (!p) return std::nullopt;
  if (reliable.empty()) return interpolate(x);
  if (grid.dim() == 1) {
    const int i = p->cell[0];
    if (!node_reliable(i) || !node_reliable(i + 1)) return std::nullopt;
  } else {
    const int n1 = grid.resolution[1];
    const long base = static_cast<long>(p->cell[0]) * n1 + p->cell[1];
    if (!node_reliable(base) || !node_reliable(base + 1) ||
        !node_reliable(base + n1) || !node_reliable(base + n1 + 1))
      return std::nullopt;
  }
  return interpolate(x);
}

GridFunction sample_grid(const GridSpec& spec,
                         const std::function<double(const Vector&)>& f) {
  spec.validate();
  GridFunction out;
  out.grid = spec;
  out.values.reserve(spec.node_count());
  if (spec.dim() == 1) {
    for (int i = 0; i < spec.resolution[0]; ++i)
      out.values.push_back(f(Vector{spec.coord(0, i)}));
  } else {
    for (int i = 0; i < spec.resolution[0]; ++i)
      for (int j = 0; j < spec.resolution[1]; ++j)
        out.values.push_back(f(Vector{spec.coord(0, i), spec.coord(1, j)}));
  }
  for (double v : out.values)
    if (!std::isfinite(v)) throw BadParams("sampled function must be finite on the box");
  return out;
}

namespace {

double axis_slope_bound(const GridFunction& f, int axis) {
  const GridSpec& g = f.grid;
  const double h = g.step(axis);
  double m = 0.0;
  if (g.dim() == 1) {
    for (int i = 0; i + 1 < g.resolution[0]; ++i)
      m = std::max(m, std::abs(f.values[i + 1] - f.values[i]) / h);
    return m;
  }
  const int n0 = g.resolution[0], n1 = g.resolution[1];
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j) {
      if (axis == 0 && i + 1 < n0)
        m = std::max(m, std::abs(f.value(i + 1, j) - f.value(i, j)) / h);
      if (axis == 1 && j + 1 < n1)
        m = std::max(m, std::abs(f.value(i, j + 1) - f.value(i, j)) / h);
    }
  return m;
}

struct AxisSup {
  double value = -std::numeric_limits<double>::infinity();
  int argmax = 0;
};

/* max over i of y * x_i + base_i, first argmax kept. */
AxisSup line_sup(double y, const std::vector<double>& xs,
                 const double* base, long stride, int count) {
  AxisSup s;
  for (int i = 0; i < count; ++i) {
    const double v = y * xs[i] + base[static_cast<long>(i) * stride];
    if (v > s.value) {
      s.value = v;
      s.argmax = i;
    }
  }
  return s;
}

}  // namespace

GridFunction legendre_grid(const GridFunction& f) {
  const GridSpec& g = f.grid;
  g.validate();
  const int d = g.dim();

  GridSpec dual;
  dual.resolution = g.resolution;
  for (int j = 0; j < d; ++j) {
    const double l = 0.8 * axis_slope_bound(f, j);
    if (!(l > 0.0)) throw BadParams("flat axis leaves no dual range");
    dual.box.push_back({-l, l});
  }

  GridFunction out;
  out.grid = dual;

  if (d == 1) {
    const int n = g.resolution[0];
    std::vector<double> xs(n), neg(n);
    for (int i = 0; i < n; ++i) {
      xs[i] = g.coord(0, i);
      neg[i] = -f.values[i];
    }
    for (int k = 0; k < n; ++k) {
      const AxisSup s = line_sup(dual.coord(0, k), xs, neg.data(), 1, n);
      out.values.push_back(s.value);
      out.reliable.push_back(s.argmax > 0 && s.argmax < n - 1 ? 1 : 0);
    }
    return out;
  }

  /* Two passes: conjugate in x0 for every fixed x1, then in x1.  The nested
   * maxima equal the joint brute-force supremum exactly; the joint argmax is
   * (pass-1 argmax at the pass-2 winner, pass-2 argmax), which is what the
   * reliability flag needs. */
  const int n0 = g.resolution[0], n1 = g.resolution[1];
  std::vector<double> x0(n0), x1(n1);
  for (int i = 0; i < n0; ++i) x0[i] = g.coord(0, i);
  for (int j = 0; j < n1; ++j) x1[j] = g.coord(1, j);

  std::vector<double> neg(f.values.size());
  for (size_t i = 0; i < neg.size(); ++i) neg[i] = -f.values[i];

  std::vector<double> mid(static_cast<long>(n0) * n1);
  std::vector<std::uint8_t> mid_ok(mid.size());
  for (int k0 = 0; k0 < n0; ++k0) {
    const double y0 = dual.coord(0, k0);
    for (int j = 0; j < n1; ++j) {
      const AxisSup s = line_sup(y0, x0, neg.data() + j, n1, n0);
      mid[static_cast<long>(k0) * n1 + j] = s.value;
      mid_ok[static_cast<long>(k0) * n1 + j] =
          s.argmax > 0 && s.argmax < n0 - 1 ? 1 : 0;
    }
  }
  for (int k0 = 0; k0 < n0; ++k0) {
    const double* row = mid.data() + static_cast<long>(k0) * n1;
    for (int k1 = 0; k1 < n1; ++k1) {
      const AxisSup s = line_sup(dual.coord(1, k1), x1, row, 1, n1);
      out.values.push_back(s.value);
      const bool interior = s.argmax > 0 && s.argmax < n1 - 1 &&
                            mid_ok[static_cast<long>(k0) * n1 + s.argmax] != 0;
      out.reliable.push_back(interior ? 1 : 0);
    }
  }
  return out;
}

double quadratic_conjugate(const Matrix& a, const Vector& xstar) {
  if (!is_positive_definite(a))
    throw NotPositiveDefinite("conjugate formula needs a positive definite form");
  if (static_cast<int>(xstar.size()) != a.dim())
    throw DimensionMismatch("argument dimension must match the form");
  return 0.5 * dot(inverse(a) * xstar, xstar);
}

double gauge_power_conjugate(const ConvexSet& c, double p, const Vector& xstar) {
  if (!(p > 1.0)) throw BadParams("exponent must exceed 1");
  if (!classify(c).bounded)
    throw UnboundedSet("gauge powers of unbounded sets are not conjugated here");
  const double q = p / (p - 1.0);
  const double s = support(c, xstar);
  return std::pow(s, q) / q;
}

double fixedpoint_function_residual(const ConvexSet& c, const Operator& g,
                                    const GridSpec& grid) {
  grid.validate();
  if (!classify(c).bounded) throw UnboundedSet("bridge needs a bounded body");
  if (dim(c) != 0 && dim(c) != grid.dim())
    throw DimensionMismatch("set and grid dimensions must agree");

  const GridFunction f =
      sample_grid(grid, [&](const Vector& x) {
        const double t = gauge(c, x);
        return 0.5 * t * t;
      });
  const GridFunction fstar = legendre_grid(f);
  const Matrix gt = g.adjoint();

  double sup = 0.0;
  long used = 0;
  const int d = grid.dim();
  const int n0 = grid.resolution[0];
  const int n1 = d == 2 ? grid.resolution[1] : 1;
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j) {
      Vector x = d == 1 ? Vector{grid.coord(0, i)}
                        : Vector{grid.coord(0, i), grid.coord(1, j)};
      const auto dual_val = fstar.interpolate_reliable(gt * x);
      if (!dual_val) continue;
      const double fx = d == 1 ? f.value(i) : f.value(i, j);
      sup = std::max(sup, std::abs(fx - *dual_val));
      ++used;
    }
  if (used == 0) throw BadParams("no grid node lands in the reliable dual box");
  return sup;
}

double functional_equation_residual(const GridFunction& f, const Operator& e) {
  const GridSpec& g = f.grid;
  g.validate();
  const Matrix m = e.inverse_matrix() * e.adjoint();

  double sup = 0.0;
  const int d = g.dim();
  const int n0 = g.resolution[0];
  const int n1 = d == 2 ? g.resolution[1] : 1;
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j) {
      Vector x = d == 1 ? Vector{g.coord(0, i)}
                        : Vector{g.coord(0, i), g.coord(1, j)};
      const auto mapped = f.interpolate(m * x);
      if (!mapped) continue;  // clipped rather than extrapolated
      const double fx = d == 1 ? f.value(i) : f.value(i, j);
      sup = std::max(sup, std::abs(fx - *mapped));
    }
  return sup;
}

CoercivityReport coercivity_check(const Matrix& a, int samples) {
  if (samples < 1) throw BadParams("need at least one sample");
  CoercivityReport rep;
  rep.beta = coercivity_constant(a);

  const SpectralDecomposition eig = sym_eig(a);
  const int n = a.dim();
  rep.attained_at.resize(n);
  for (int i = 0; i < n; ++i) rep.attained_at[i] = eig.eigenvectors(i, 0);

  double lo = std::numeric_limits<double>::infinity();
  for (int k = 0; k < samples; ++k) {
    const Vector u = sphere_direction(n, k, 0);
    lo = std::min(lo, dot(a * u, u));
  }
  rep.sampled_min = lo;
  return rep;
}

void write_grid_csv(const GridFunction& f, std::ostream& out) {
  const GridSpec& g = f.grid;
  char buf[64];
  const auto put = [&](double v, char sep) {
    std::snprintf(buf, sizeof buf, "%.17g%c", v, sep);
    out << buf;
  };
  if (g.dim() == 1) {
    for (int i = 0; i < g.resolution[0]; ++i) {
      put(g.coord(0, i), ',');
      put(f.values[i], '\n');
    }
    return;
  }
  for (int i = 0; i < g.resolution[0]; ++i)
    for (int j = 0; j < g.resolution[1]; ++j) {
      put(g.coord(0, i), ',');
      put(g.coord(1, j), ',');
      put(f.value(i, j), '\n');
    }
}

}  // namespace polarfix
