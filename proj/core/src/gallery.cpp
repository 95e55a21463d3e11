#include "polarfix/gallery.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "polarfix/errors.hpp"

namespace polarfix {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

/* Param helpers: consume recognized keys, then reject leftovers. */
double take(std::map<std::string, double>& p, const std::string& key, double def) {
  const auto it = p.find(key);
  if (it == p.end()) return def;
  const double v = it->second;
  p.erase(it);
  return v;
}

int take_int(std::map<std::string, double>& p, const std::string& key, int def,
             int lo, int hi) {
  const double v = take(p, key, def);
  if (v != std::floor(v) || v < lo || v > hi)
    throw BadParams("parameter '" + key + "' must be an integer in range");
  return static_cast<int>(v);
}

void reject_leftovers(const std::map<std::string, double>& p) {
  if (!p.empty()) throw BadParams("unknown parameter '" + p.begin()->first + "'");
}

Matrix quarter_turn_blocks(int pairs) {
  Matrix m(2 * pairs);
  for (int i = 0; i < pairs; ++i) {
    m(2 * i, 2 * i + 1) = 1.0;
    m(2 * i + 1, 2 * i) = -1.0;
  }
  return m;
}

PolytopeV unit_square() {
  return PolytopeV{{{1.0, 1.0}, {-1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}}};
}

GalleryEntry lorentz_entry(std::map<std::string, double> p) {
  const int n = take_int(p, "n", 3, 2, 16);
  reject_leftovers(p);
  Vector axis(n, 0.0);
  axis[n - 1] = 1.0;
  return GalleryEntry{
      "lorentz",
      {{"n", double(n)}},
      Operator::scalar(-1.0, n),
      {LorentzCone{axis}},
      {true},
      "circular cone of half-aperture pi/4: self-dual, so it equals the polar "
      "of its own reflection (in the plane it is a rotated orthant)"};
}

GalleryEntry orthant_entry(std::map<std::string, double> p) {
  const int n = take_int(p, "n", 3, 1, 16);
  reject_leftovers(p);
  return GalleryEntry{
      "orthant",
      {{"n", double(n)}},
      Operator::scalar(-1.0, n),
      {Orthant{std::vector<int>(n, 1)}},
      {true},
      "the nonnegative orthant equals the polar of its reflection; sign "
      "relabelings and rotations give further solutions"};
}

GalleryEntry simplex_entry(std::map<std::string, double> p) {
  const int n = take_int(p, "n", 2, 2, 16);
  reject_leftovers(p);
  return GalleryEntry{
      "simplex",
      {{"n", double(n)}},
      Operator::scalar(-1.0, n),
      {PolytopeV{simplex_vertices(n, std::sqrt(double(n)))}},
      {true},
      "regular simplex with circumradius sqrt(n): every facet plane passes "
      "through a reflected vertex over n, so the hull equals the polar of its "
      "reflection"};
}

GalleryEntry ellipse_family_entry(std::map<std::string, double> p) {
  const double lam = take(p, "lambda", 3.0);
  if (!(lam > 0.0)) throw BadParams("lambda must be positive");
  reject_leftovers(p);
  return GalleryEntry{
      "ellipse_family",
      {{"lambda", lam}},
      Operator(quarter_turn_blocks(1)),
      {Ellipsoid{Matrix::diagonal({lam * lam, 1.0 / (lam * lam)})}},
      {true},
      "the quarter turn fixes every ellipse lam^2 x1^2 + x2^2/lam^2 <= 1: a "
      "one-parameter family of solutions"};
}

GalleryEntry ellipse_family_2n_entry(std::map<std::string, double> p) {
  const double l1 = take(p, "lambda1", 0.5);
  const double l2 = take(p, "lambda2", 3.0);
  if (!(l1 > 0.0 && l2 > 0.0)) throw BadParams("lambdas must be positive");
  reject_leftovers(p);
  return GalleryEntry{
      "ellipse_family_2n",
      {{"lambda1", l1}, {"lambda2", l2}},
      Operator(quarter_turn_blocks(2)),
      {Ellipsoid{Matrix::diagonal(
          {l1 * l1, 1.0 / (l1 * l1), l2 * l2, 1.0 / (l2 * l2)})}},
      {true},
      "independent quarter turns on coordinate pairs fix the product of the "
      "planar ellipse solutions"};
}

GalleryEntry square_rhombus_disc_entry(std::map<std::string, double> p) {
  reject_leftovers(p);
  const double s = std::pow(2.0, -0.25);   // square half-width
  const double r = std::pow(2.0, 0.25);    // rhombus corner distance
  const Matrix g{{kInvSqrt2, kInvSqrt2}, {-kInvSqrt2, kInvSqrt2}};
  PolytopeV square{{{s, s}, {-s, s}, {-s, -s}, {s, -s}}};
  PolytopeH rhombus{HPolyData{{{1.0 / r, 1.0 / r},
                               {-1.0 / r, 1.0 / r},
                               {-1.0 / r, -1.0 / r},
                               {1.0 / r, -1.0 / r}}}};
  return GalleryEntry{
      "square_rhombus_disc",
      {},
      Operator(g),
      {ConvexSet{square}, ConvexSet{rhombus}, ConvexSet{Ball{1.0}}},
      {true, true, true},
      "under the scaled 45-degree rotation the square of half-width 2^(-1/4), "
      "its polar rhombus, and the unit disc are all fixed: three solutions of "
      "one equation"};
}

GalleryEntry rotation_invariance_entry(std::map<std::string, double> p) {
  const double lam = take(p, "lambda", 2.0);
  if (!(lam > 0.0)) throw BadParams("lambda must be positive");
  reject_leftovers(p);
  return GalleryEntry{
      "rotation_invariance",
      {{"lambda", lam}},
      Operator(Matrix::diagonal({1.0, 1.0, lam})),
      {Ellipsoid{Matrix::diagonal({1.0, 1.0, lam})}},
      {true},
      "rotations about the stretched axis commute with G in the polarity "
      "sense, so they transport the solution ellipsoid onto itself"};
}

GalleryEntry one_d_entry(std::map<std::string, double> p) {
  const double gamma = take(p, "gamma", -1.0);
  const double b = take(p, "b", 2.0);
  if (gamma == 0.0) throw ZeroGamma("gamma must be nonzero");
  if (!(b > 0.0)) throw BadParams("b must be positive");
  reject_leftovers(p);
  const double inf = std::numeric_limits<double>::infinity();
  GalleryEntry e{"one_d",
                 {{"gamma", gamma}, {"b", b}},
                 Operator::scalar(gamma, 1),
                 {},
                 {},
                 "scalar equation: positive gamma pins one symmetric interval; "
                 "negative gamma admits an interval family plus two rays"};
  if (gamma > 0.0) {
    const double w = 1.0 / std::sqrt(gamma);
    e.sets.push_back(Interval{-w, w});
    e.expected_pass.push_back(true);
  } else {
    e.sets.push_back(Interval{1.0 / (gamma * b), b});
    e.sets.push_back(Interval{-inf, 0.0});
    e.sets.push_back(Interval{0.0, inf});
    e.expected_pass = {true, true, true};
  }
  return e;
}

GalleryEntry f_b_entry(std::map<std::string, double> p) {
  const double b = take(p, "b", 2.0);
  if (!(b > 0.0)) throw BadParams("b must be positive");
  reject_leftovers(p);
  return GalleryEntry{
      "f_b",
      {{"b", b}},
      Operator::scalar(-1.0, 1),
      {Interval{-1.0 / b, b}},
      {true},
      "the interval family member seen through the function bridge: half the "
      "squared gauge of [-1/b, b] is its own conjugate composed with negation"};
}

GalleryEntry unbounded_demo_entry(std::map<std::string, double> p) {
  const int n = take_int(p, "n", 4, 2, 64);
  reject_leftovers(p);
  Vector diag(n);
  for (int k = 0; k < n; ++k) diag[k] = 1.0 / (k + 1);
  return GalleryEntry{
      "unbounded_ellipsoid_demo",
      {{"n", double(n)}},
      Operator::scalar(-1.0, n),
      {Ellipsoid{Matrix::diagonal(diag)}},
      {false},
      "the ellipsoid of diag(1, 1/2, ..., 1/n) holds witnesses of norm "
      "sqrt(k): as the spectrum drains to 0 the set stretches without bound, "
      "and reflection-polarity shrinks it instead of fixing it"};
}

GalleryEntry semi_skew_entry(std::map<std::string, double> p) {
  const double a1 = take(p, "alpha1", 1.0);
  const double a2 = take(p, "alpha2", 2.0);
  if (a1 * a2 <= 0.0) throw BadParams("alphas must share a sign");
  if (a1 == a2) throw BadParams("equal alphas give a scaled rotation");
  reject_leftovers(p);
  return GalleryEntry{
      "semi_skew_nonexistence",
      {{"alpha1", a1}, {"alpha2", a2}},
      Operator(Matrix{{0.0, a2}, {-a1, 0.0}}),
      {ConvexSet{unit_square()}},
      {false},
      "a zero-trace, positive-determinant operator that is not a scaled "
      "rotation fixes no bounded body with 0 interior; iterates of the square "
      "stretch forever"};
}

}  // namespace

GalleryEntry gallery(const std::string& name,
                     const std::map<std::string, double>& params) {
  std::map<std::string, double> p = params;
  if (name == "lorentz") return lorentz_entry(std::move(p));
  if (name == "orthant") return orthant_entry(std::move(p));
  if (name == "simplex") return simplex_entry(std::move(p));
  if (name == "ellipse_family") return ellipse_family_entry(std::move(p));
  if (name == "ellipse_family_2n") return ellipse_family_2n_entry(std::move(p));
  if (name == "square_rhombus_disc") return square_rhombus_disc_entry(std::move(p));
  if (name == "rotation_invariance") return rotation_invariance_entry(std::move(p));
  if (name == "one_d") return one_d_entry(std::move(p));
  if (name == "f_b") return f_b_entry(std::move(p));
  if (name == "unbounded_ellipsoid_demo") return unbounded_demo_entry(std::move(p));
  if (name == "semi_skew_nonexistence") return semi_skew_entry(std::move(p));
  throw UnknownEntry("no gallery entry named '" + name + "'");
}

std::vector<std::string> gallery_names() {
  return {"lorentz",
          "orthant",
          "simplex",
          "ellipse_family",
          "ellipse_family_2n",
          "square_rhombus_disc",
          "rotation_invariance",
          "one_d",
          "f_b",
          "unbounded_ellipsoid_demo",
          "semi_skew_nonexistence"};
}

std::vector<Vector> simplex_vertices(int n, double r) {
  if (n < 2) throw BadParams("simplex construction needs dimension >= 2");
  if (!(r > 0.0)) throw BadParams("circumradius must be positive");

  /* Lift dimension by dimension at circumradius 1: shrink the previous
   * vertices, drop them to height -1/k, add the apex e_k.  The shrink factor
   * keeps norms 1; the height keeps the centroid at 0. */
  std::vector<Vector> v{{1.0}, {-1.0}};
  for (int k = 2; k <= n; ++k) {
    const double h = 1.0 / k;
    const double s = std::sqrt(1.0 - h * h);
    std::vector<Vector> next;
    next.reserve(v.size() + 1);
    for (const Vector& w : v) {
      Vector x = scaled(w, s);
      x.push_back(-h);
      next.push_back(std::move(x));
    }
    Vector apex(k, 0.0);
    apex[k - 1] = 1.0;
    next.push_back(std::move(apex));
    v = std::move(next);
  }
  for (Vector& w : v) w = scaled(w, r);
  return v;
}

UnboundedEllipsoidReport unbounded_ellipsoid_demo(int n) {
  if (n < 2) throw BadParams("demo needs dimension >= 2");
  UnboundedEllipsoidReport rep;
  rep.n = n;
  rep.witness_norms.reserve(n);
  for (int k = 1; k <= n; ++k) rep.witness_norms.push_back(std::sqrt(double(k)));
  rep.max_norm = rep.witness_norms.back();
  return rep;
}

}  // namespace polarfix
