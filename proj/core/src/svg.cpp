#include "polarfix/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "polarfix/errors.hpp"
#include "polarfix/linalg.hpp"
#include "polarfix/poly2d.hpp"

namespace polarfix {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kRayLen = 6.0;  // past the frame; the viewBox clips
constexpr int kArcSegments = 128;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                          "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5g", v);
  return buf;
}

std::string path_from_points(const std::vector<Vector>& pts, bool close,
                             bool from_origin = false) {
  std::string d;
  if (from_origin) d += "M 0 0 L ";
  for (size_t i = 0; i < pts.size(); ++i) {
    d += (i == 0 && !from_origin) ? "M " : (i == 0 ? "" : "L ");
    d += num(pts[i][0]) + " " + num(pts[i][1]) + " ";
  }
  if (close) d += "Z";
  return d;
}

std::vector<Vector> ellipse_points(const Matrix& shape) {
  /* Boundary <Ax,x> = 1 parameterized as U diag(1/sqrt(l)) U^T (cos, sin). */
  const SpectralDecomposition eig = sym_eig(shape);
  if (eig.eigenvalues[0] <= 0.0)
    throw NotPositiveDefinite("only positive definite ellipses are drawable");
  Matrix half(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        half(i, j) += eig.eigenvectors(i, k) * eig.eigenvectors(j, k) /
                      std::sqrt(eig.eigenvalues[k]);
  std::vector<Vector> pts;
  pts.reserve(kArcSegments);
  for (int s = 0; s < kArcSegments; ++s) {
    const double t = 2.0 * kPi * s / kArcSegments;
    pts.push_back(half * Vector{std::cos(t), std::sin(t)});
  }
  return pts;
}

double angle_of(const Vector& v) { return std::atan2(v[1], v[0]); }

/* Fan polygon for a pointed planar cone given by boundary/interior rays. */
std::string wedge_path(std::vector<Vector> rays) {
  if (rays.empty()) throw BadParams("empty cone has no drawable wedge");
  for (Vector& r : rays) r = scaled(normalized(r), kRayLen);
  std::sort(rays.begin(), rays.end(), [](const Vector& a, const Vector& b) {
    return angle_of(a) < angle_of(b);
  });
  /* If the angular span read in sorted order exceeds pi, the arc wraps
   * through the branch cut; rotate the list so the true gap is the seam. */
  const size_t n = rays.size();
  if (n > 1) {
    double best_gap = 2.0 * kPi + angle_of(rays[0]) - angle_of(rays[n - 1]);
    size_t seam = 0;
    for (size_t i = 1; i < n; ++i) {
      const double gap = angle_of(rays[i]) - angle_of(rays[i - 1]);
      if (gap > best_gap) {
        best_gap = gap;
        seam = i;
      }
    }
    std::rotate(rays.begin(), rays.begin() + seam, rays.end());
  }
  return path_from_points(rays, true, true);
}

std::vector<Vector> coneh_rays(const HPolyData& data) {
  std::vector<Vector> rays;
  const auto feasible = [&](const Vector& d) {
    for (const Vector& a : data.rows)
      if (dot(a, d) > 1e-10) return false;
    return true;
  };
  for (const Vector& a : data.rows) {
    for (double s : {1.0, -1.0}) {
      const Vector d{-s * a[1], s * a[0]};
      if (!feasible(d)) continue;
      bool dup = false;
      for (const Vector& r : rays)
        if (norm(vec_sub(normalized(r), normalized(d))) < 1e-9) dup = true;
      if (!dup) rays.push_back(d);
    }
    const Vector inward = scaled(a, -1.0);  // interior filler for halfplanes
    if (feasible(inward)) rays.push_back(inward);
  }
  if (rays.empty()) throw BadParams("halfspace data admits no drawable ray");
  return rays;
}

std::string interval_path(const Interval& iv) {
  const double lo = std::max(iv.lo, -3.0);
  const double hi = std::min(iv.hi, 3.0);
  std::string d = "M " + num(lo) + " 0 L " + num(hi) + " 0 ";
  if (std::isfinite(iv.lo))
    d += "M " + num(iv.lo) + " -0.12 L " + num(iv.lo) + " 0.12 ";
  if (std::isfinite(iv.hi))
    d += "M " + num(iv.hi) + " -0.12 L " + num(iv.hi) + " 0.12 ";
  return d;
}

std::string set_path(const ConvexSet& c) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Ball>) {
          return path_from_points(
              ellipse_points(Matrix::diagonal({1.0 / (s.radius * s.radius),
                                               1.0 / (s.radius * s.radius)})),
              true);
        } else if constexpr (std::is_same_v<T, Ellipsoid>) {
          return path_from_points(ellipse_points(s.shape), true);
        } else if constexpr (std::is_same_v<T, PolytopeV>) {
          return path_from_points(convex_hull_2d(s.vertices), true);
        } else if constexpr (std::is_same_v<T, PolytopeH>) {
          return path_from_points(h_vertices_2d(s.data), true);
        } else if constexpr (std::is_same_v<T, ConeV>) {
          return wedge_path(s.generators);
        } else if constexpr (std::is_same_v<T, ConeH>) {
          return wedge_path(coneh_rays(s.data));
        } else if constexpr (std::is_same_v<T, LorentzCone>) {
          const Vector u = normalized(s.axis);
          const double c = std::cos(kPi / 4.0), n = std::sin(kPi / 4.0);
          return wedge_path({{c * u[0] - n * u[1], n * u[0] + c * u[1]},
                             {c * u[0] + n * u[1], -n * u[0] + c * u[1]}});
        } else if constexpr (std::is_same_v<T, Orthant>) {
          const double sx = s.signs[0], sy = s.signs[1];
          return path_from_points({{kRayLen * sx, 0.0},
                                   {kRayLen * sx, kRayLen * sy},
                                   {0.0, kRayLen * sy}},
                                  true, true);
        } else {
          return interval_path(s);
        }
      },
      c);
}

}  // namespace

std::string render_svg(const std::vector<ConvexSet>& sets) {
  for (const ConvexSet& c : sets) {
    const int d = dim(c);
    const bool interval = std::holds_alternative<Interval>(c);
    if (!(d == 0 || d == 2 || (interval && d == 1)))
      throw UnsupportedRepresentation("only planar sets and intervals render");
  }

  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-3 -3 6 6\" "
      "width=\"480\" height=\"480\">\n"
      "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-linejoin=\"round\">\n"
      "<path d=\"M -3 0 L 3 0 M 0 -3 L 0 3\" stroke=\"#cccccc\" "
      "stroke-width=\"0.015\"/>\n";
  for (size_t i = 0; i < sets.size(); ++i) {
    out += "<path d=\"" + set_path(sets[i]) + "\" stroke=\"" +
           kPalette[i % (sizeof kPalette / sizeof *kPalette)] +
           "\" stroke-width=\"0.035\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace polarfix
