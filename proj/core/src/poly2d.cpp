#include "polarfix/poly2d.hpp"

#include <algorithm>
#include <cmath>

#include "polarfix/errors.hpp"

namespace polarfix {

namespace {

double cross(const Vector& o, const Vector& a, const Vector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

std::vector<Vector> convex_hull_2d(std::vector<Vector> pts) {
  for (const auto& p : pts)
    if (p.size() != 2) throw DimensionMismatch("convex_hull_2d: points must be 2D");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vector& a, const Vector& b) {
                          return std::fabs(a[0] - b[0]) < 1e-12 && std::fabs(a[1] - b[1]) < 1e-12;
                        }),
            pts.end());
  size_t n = pts.size();
  if (n < 3) return pts;
  std::vector<Vector> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 1e-14) --k;
    hull[k++] = pts[i];
  }
  size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 1e-14) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<Vector> h_vertices_2d(const HPolyData& h) {
  if (h.dim() != 2) throw DimensionMismatch("h_vertices_2d: rows must be 2D");
  const auto& rows = h.rows;
  std::vector<Vector> pts;
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = i + 1; j < rows.size(); ++j) {
      double det = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0];
      if (std::fabs(det) < 1e-12) continue;
      Vector p = {(rows[j][1] - rows[i][1]) / det, (rows[i][0] - rows[j][0]) / det};
      bool feasible = true;
      for (const auto& r : rows)
        if (dot(r, p) > 1.0 + 1e-9 * (1.0 + norm(r) * norm(p))) {
          feasible = false;
          break;
        }
      if (feasible) pts.push_back(p);
    }
  }
  if (pts.size() < 3) throw UnboundedLp("h_vertices_2d: region is not a bounded polygon");
  std::vector<Vector> hull = convex_hull_2d(pts);
  if (hull.size() < 3) throw UnboundedLp("h_vertices_2d: region is not a bounded polygon");
  return hull;
}

HPolyData v_facets_2d(const std::vector<Vector>& vertices) {
  std::vector<Vector> hull = convex_hull_2d(vertices);
  if (hull.size() < 3) throw BadParams("v_facets_2d: need a full-dimensional polygon");
  std::vector<Vector> rows;
  for (size_t i = 0; i < hull.size(); ++i) {
    const Vector& p = hull[i];
    const Vector& q = hull[(i + 1) % hull.size()];
    /* Outward normal of edge p->q for a CCW polygon. */
    Vector nrm = {q[1] - p[1], p[0] - q[0]};
    double b = dot(nrm, p);
    if (b <= 1e-12) throw BadParams("v_facets_2d: origin not interior to the hull");
    rows.push_back(scaled(nrm, 1.0 / b));
  }
  return HPolyData(std::move(rows));
}

}  // namespace polarfix
