#include "polarfix/sets.hpp"

#include <cmath>
#include <limits>

#include "polarfix/errors.hpp"
#include "polarfix/lp.hpp"
#include "polarfix/poly2d.hpp"

namespace polarfix {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kHalfSqrt2 = 0.70710678118654752440;

/* Membership slack for exact cone comparisons; keeps boundary directions from
 * flapping on rounding noise alone. */
constexpr double kConeSlack = 1e-12;

void check_dim(const ConvexSet& c, const Vector& x, const char* what) {
  int d = dim(c);
  if (d != 0 && static_cast<int>(x.size()) != d)
    throw DimensionMismatch(std::string(what) + ": vector dimension mismatch");
  if (d == 0 && x.empty()) throw DimensionMismatch(std::string(what) + ": empty vector");
}

}  // namespace

int dim(const ConvexSet& c) {
  struct Visitor {
    int operator()(const Ball&) const { return 0; }
    int operator()(const Ellipsoid& e) const { return e.shape.dim(); }
    int operator()(const PolytopeV& p) const { return static_cast<int>(p.vertices.front().size()); }
    int operator()(const PolytopeH& p) const { return p.data.dim(); }
    int operator()(const ConeV& k) const { return static_cast<int>(k.generators.front().size()); }
    int operator()(const ConeH& k) const { return k.data.dim(); }
    int operator()(const LorentzCone& k) const { return static_cast<int>(k.axis.size()); }
    int operator()(const Orthant& o) const { return static_cast<int>(o.signs.size()); }
    int operator()(const Interval&) const { return 1; }
  };
  return std::visit(Visitor{}, c);
}

void validate(const ConvexSet& c) {
  struct Visitor {
    void operator()(const Ball& b) const {
      if (!(b.radius > 0.0) || !std::isfinite(b.radius))
        throw BadParams("Ball: radius must be a positive real");
    }
    void operator()(const Ellipsoid& e) const {
      if (!is_positive_definite(e.shape))
        throw NotPositiveDefinite("Ellipsoid: shape matrix must be positive definite");
    }
    void operator()(const PolytopeV& p) const {
      if (p.vertices.empty()) throw BadParams("PolytopeV: no vertices");
      size_t n = p.vertices.front().size();
      if (n == 0) throw BadParams("PolytopeV: zero-dimensional vertex");
      for (const auto& v : p.vertices) {
        if (v.size() != n) throw DimensionMismatch("PolytopeV: vertex length mismatch");
        for (double x : v)
          if (!std::isfinite(x)) throw BadParams("PolytopeV: non-finite vertex");
      }
    }
    void operator()(const PolytopeH& p) const {
      if (p.data.rows.empty()) throw BadParams("PolytopeH: no rows");
    }
    void operator()(const ConeV& k) const {
      if (k.generators.empty()) throw BadParams("ConeV: no generators");
      size_t n = k.generators.front().size();
      for (const auto& g : k.generators) {
        if (g.size() != n) throw DimensionMismatch("ConeV: generator length mismatch");
        if (norm(g) == 0.0) throw BadParams("ConeV: zero generator");
      }
    }
    void operator()(const ConeH& k) const {
      if (k.data.rows.empty()) throw BadParams("ConeH: no rows");
    }
    void operator()(const LorentzCone& k) const {
      if (k.axis.empty()) throw BadParams("LorentzCone: empty axis");
      if (std::fabs(norm(k.axis) - 1.0) > 1e-12)
        throw BadParams("LorentzCone: axis must be a unit vector");
    }
    void operator()(const Orthant& o) const {
      if (o.signs.empty()) throw BadParams("Orthant: empty signs");
      for (int s : o.signs)
        if (s != 1 && s != -1) throw BadParams("Orthant: signs must be +1 or -1");
    }
    void operator()(const Interval& iv) const {
      if (std::isnan(iv.lo) || std::isnan(iv.hi)) throw BadParams("Interval: NaN endpoint");
      if (!(iv.lo <= 0.0 && 0.0 <= iv.hi))
        throw BadParams("Interval: endpoints must straddle 0");
    }
  };
  std::visit(Visitor{}, c);
}

SetClass classify(const ConvexSet& c) {
  struct Visitor {
    SetClass operator()(const Ball&) const { return {true, true, false, true}; }
    SetClass operator()(const Ellipsoid&) const { return {true, true, false, true}; }
    SetClass operator()(const PolytopeV& p) const {
      return {true, true, false, mirrored(p.vertices)};
    }
    SetClass operator()(const PolytopeH& p) const {
      return {true, true, false, mirrored(p.data.rows)};
    }
    SetClass operator()(const ConeV&) const { return {false, false, true, false}; }
    SetClass operator()(const ConeH&) const { return {false, false, true, false}; }
    SetClass operator()(const LorentzCone&) const { return {false, false, true, false}; }
    SetClass operator()(const Orthant&) const { return {false, false, true, false}; }
    SetClass operator()(const Interval& iv) const {
      bool bounded = std::isfinite(iv.lo) && std::isfinite(iv.hi);
      bool endpoints_conic = (iv.lo == 0.0 || iv.lo == -kInf) && (iv.hi == 0.0 || iv.hi == kInf);
      bool degenerate = iv.lo == 0.0 && iv.hi == 0.0;
      return {bounded, iv.lo < 0.0 && iv.hi > 0.0, endpoints_conic && !degenerate,
              iv.lo == -iv.hi};
    }

    static bool mirrored(const std::vector<Vector>& pts) {
      for (const auto& p : pts) {
        bool found = false;
        for (const auto& q : pts)
          if (norm(vec_add(p, q)) <= 1e-12 * (1.0 + norm(p))) {
            found = true;
            break;
          }
        if (!found) return false;
      }
      return true;
    }
  };
  return std::visit(Visitor{}, c);
}

double gauge(const ConvexSet& c, const Vector& x) {
  check_dim(c, x, "gauge");
  struct Visitor {
    const Vector& x;

    double operator()(const Ball& b) const { return norm(x) / b.radius; }
    double operator()(const Ellipsoid& e) const {
      return std::sqrt(std::max(0.0, dot(x, e.shape * x)));
    }
    double operator()(const PolytopeV& p) const {
      /* Gauge of the hull equals the support of the polar, whose H-rows are
       * exactly the vertices. */
      return std::max(0.0, lp_support(x, HPolyData(p.vertices)));
    }
    double operator()(const PolytopeH& p) const {
      double m = 0.0;
      for (const auto& a : p.data.rows) m = std::max(m, dot(a, x));
      return m;
    }
    double operator()(const ConeV& k) const { return cone_gauge(contains(ConvexSet(k), x, kConeSlack)); }
    double operator()(const ConeH& k) const { return cone_gauge(contains(ConvexSet(k), x, kConeSlack)); }
    double operator()(const LorentzCone& k) const {
      return cone_gauge(contains(ConvexSet(k), x, kConeSlack));
    }
    double operator()(const Orthant& o) const { return cone_gauge(contains(ConvexSet(o), x, kConeSlack)); }
    double operator()(const Interval& iv) const {
      double t = x[0];
      if (t == 0.0) return 0.0;
      if (t > 0.0) {
        if (iv.hi == kInf) return 0.0;
        if (iv.hi == 0.0) return kInf;
        return t / iv.hi;
      }
      if (iv.lo == -kInf) return 0.0;
      if (iv.lo == 0.0) return kInf;
      return t / iv.lo;
    }

    static double cone_gauge(bool member) { return member ? 0.0 : kInf; }
  };
  return std::visit(Visitor{x}, c);
}

double support(const ConvexSet& c, const Vector& u) {
  check_dim(c, u, "support");
  struct Visitor {
    const Vector& u;

    double operator()(const Ball& b) const { return b.radius * norm(u); }
    double operator()(const Ellipsoid& e) const {
      return std::sqrt(std::max(0.0, dot(u, inverse(e.shape) * u)));
    }
    double operator()(const PolytopeV& p) const {
      double m = -kInf;
      for (const auto& v : p.vertices) m = std::max(m, dot(u, v));
      return m;
    }
    double operator()(const PolytopeH& p) const { return lp_support(u, p.data); }
    double operator()(const ConeV& k) const {
      double un = norm(u);
      for (const auto& g : k.generators)
        if (dot(u, g) > kConeSlack * un * norm(g)) return kInf;
      return 0.0;
    }
    double operator()(const ConeH& k) const {
      /* Finite (zero) exactly when u lies in the cone the rows generate. */
      double un = norm(u);
      if (un == 0.0) return 0.0;
      return cone_infeasibility(scaled(u, 1.0 / un), k.data.rows) <= kConeSlack ? 0.0 : kInf;
    }
    double operator()(const LorentzCone& k) const {
      double un = norm(u);
      if (un == 0.0) return 0.0;
      return dot(scaled(u, 1.0 / un), k.axis) <= -(kHalfSqrt2 - kConeSlack) ? 0.0 : kInf;
    }
    double operator()(const Orthant& o) const {
      double un = norm(u);
      for (size_t i = 0; i < o.signs.size(); ++i)
        if (o.signs[i] * u[i] > kConeSlack * un) return kInf;
      return 0.0;
    }
    double operator()(const Interval& iv) const {
      double t = u[0];
      if (t == 0.0) return 0.0;
      if (t > 0.0) return iv.hi == kInf ? kInf : t * iv.hi;
      return iv.lo == -kInf ? kInf : t * iv.lo;
    }
  };
  return std::visit(Visitor{u}, c);
}

bool contains(const ConvexSet& c, const Vector& x, double tol) {
  check_dim(c, x, "contains");
  struct Visitor {
    const ConvexSet& c;
    const Vector& x;
    double tol;

    bool operator()(const Ball&) const { return bounded_case(); }
    bool operator()(const Ellipsoid&) const { return bounded_case(); }
    bool operator()(const PolytopeV&) const { return bounded_case(); }
    bool operator()(const PolytopeH&) const { return bounded_case(); }
    bool operator()(const ConeV& k) const {
      double xn = norm(x);
      if (xn == 0.0) return true;
      return cone_infeasibility(scaled(x, 1.0 / xn), k.generators) <= tol + 1e-12;
    }
    bool operator()(const ConeH& k) const {
      double xn = norm(x);
      if (xn == 0.0) return true;
      for (const auto& a : k.data.rows)
        if (dot(a, x) / (norm(a) * xn) > tol) return false;
      return true;
    }
    bool operator()(const LorentzCone& k) const {
      double xn = norm(x);
      if (xn == 0.0) return true;
      return dot(scaled(x, 1.0 / xn), k.axis) >= kHalfSqrt2 - tol;
    }
    bool operator()(const Orthant& o) const {
      double xn = norm(x);
      if (xn == 0.0) return true;
      for (size_t i = 0; i < o.signs.size(); ++i)
        if (o.signs[i] * x[i] / xn < -tol) return false;
      return true;
    }
    bool operator()(const Interval& iv) const {
      return x[0] >= iv.lo - tol && x[0] <= iv.hi + tol;
    }

    bool bounded_case() const { return gauge(c, x) <= 1.0 + tol; }
  };
  return std::visit(Visitor{c, x, tol}, c);
}

double outer_radius(const ConvexSet& c) {
  struct Visitor {
    double operator()(const Ball& b) const { return b.radius; }
    double operator()(const Ellipsoid& e) const {
      return 1.0 / std::sqrt(sym_eig(e.shape).eigenvalues.front());
    }
    double operator()(const PolytopeV& p) const {
      double m = 0.0;
      for (const auto& v : p.vertices) m = std::max(m, norm(v));
      return m;
    }
    double operator()(const PolytopeH& p) const {
      if (p.data.dim() != 2)
        throw UnsupportedRepresentation("outer_radius: H-polytope only exact in 2D");
      double m = 0.0;
      for (const auto& v : h_vertices_2d(p.data)) m = std::max(m, norm(v));
      return m;
    }
    double operator()(const Interval& iv) const {
      if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi))
        throw UnboundedSet("outer_radius: unbounded interval");
      return std::max(-iv.lo, iv.hi);
    }
    double operator()(const ConeV&) const { return no_cone(); }
    double operator()(const ConeH&) const { return no_cone(); }
    double operator()(const LorentzCone&) const { return no_cone(); }
    double operator()(const Orthant&) const { return no_cone(); }
    static double no_cone() {
      throw UnsupportedRepresentation("outer_radius: undefined for cones");
    }
  };
  return std::visit(Visitor{}, c);
}

double inner_radius(const ConvexSet& c) {
  struct Visitor {
    double operator()(const Ball& b) const { return b.radius; }
    double operator()(const Ellipsoid& e) const {
      return 1.0 / std::sqrt(sym_eig(e.shape).eigenvalues.back());
    }
    double operator()(const PolytopeV& p) const {
      if (static_cast<int>(p.vertices.front().size()) != 2)
        throw UnsupportedRepresentation("inner_radius: V-polytope only exact in 2D");
      return inner_from_rows(v_facets_2d(p.vertices));
    }
    double operator()(const PolytopeH& p) const { return inner_from_rows(p.data); }
    double operator()(const Interval& iv) const { return std::min(-iv.lo, iv.hi); }
    double operator()(const ConeV&) const { return no_cone(); }
    double operator()(const ConeH&) const { return no_cone(); }
    double operator()(const LorentzCone&) const { return no_cone(); }
    double operator()(const Orthant&) const { return no_cone(); }
    static double no_cone() {
      throw UnsupportedRepresentation("inner_radius: undefined for cones");
    }

    static double inner_from_rows(const HPolyData& h) {
      double r = kInf;
      for (const auto& a : h.rows) r = std::min(r, 1.0 / norm(a));
      return r;
    }
  };
  return std::visit(Visitor{}, c);
}

}  // namespace polarfix
