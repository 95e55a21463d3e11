#include "polarfix/polarity.hpp"

#include <cmath>
#include <limits>

#include "polarfix/errors.hpp"
#include "polarfix/linalg.hpp"

namespace polarfix {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/* 1/x extended to the endpoint conventions of the interval polar:
 * 1/0 from below is -inf, from above +inf, 1/(+-inf) is 0. */
double polar_lo(double lo) {
  if (lo == -kInf) return 0.0;
  if (lo == 0.0) return -kInf;
  return 1.0 / lo;
}

double polar_hi(double hi) {
  if (hi == kInf) return 0.0;
  if (hi == 0.0) return kInf;
  return 1.0 / hi;
}

/* G = t U with t > 0 and U unitary iff G^T G is t^2 I. */
bool scaled_unitary_factor(const Matrix& g, double* t) {
  Matrix gram = transpose(g) * g;
  double tr = 0.0;
  for (int i = 0; i < gram.dim(); ++i) tr += gram(i, i);
  double t2 = tr / gram.dim();
  if (t2 <= 0.0) return false;
  if (frobenius_norm(gram - t2 * Matrix::identity(gram.dim())) >
      hybrid_tol(frobenius_norm(gram)))
    return false;
  *t = std::sqrt(t2);
  return true;
}

/* Monomial pattern: exactly one nonzero per row and column.  Returns the
 * row index and sign of each column's entry. */
bool monomial_pattern(const Matrix& g, std::vector<int>* row_of_col,
                      std::vector<int>* sign_of_col) {
  int n = g.dim();
  double floor = hybrid_tol(max_abs_entry(g));
  std::vector<int> row_used(static_cast<size_t>(n), 0);
  row_of_col->assign(static_cast<size_t>(n), -1);
  sign_of_col->assign(static_cast<size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (std::fabs(g(i, j)) <= floor) continue;
      if ((*row_of_col)[static_cast<size_t>(j)] >= 0) return false;
      (*row_of_col)[static_cast<size_t>(j)] = i;
      (*sign_of_col)[static_cast<size_t>(j)] = g(i, j) > 0.0 ? 1 : -1;
    }
    int r = (*row_of_col)[static_cast<size_t>(j)];
    if (r < 0 || row_used[static_cast<size_t>(r)]) return false;
    row_used[static_cast<size_t>(r)] = 1;
  }
  return true;
}

std::vector<Vector> map_points(const Matrix& m, const std::vector<Vector>& pts) {
  std::vector<Vector> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(m * p);
  return out;
}

}  // namespace

Operator::Operator(Matrix m) : m_(std::move(m)) {
  inv_ = inverse(m_);
  t_ = transpose(m_);
  tinv_ = transpose(inv_);
  double scale = std::max(1.0, frobenius_norm(m_) * frobenius_norm(inv_));
  if (frobenius_norm(m_ * inv_ - Matrix::identity(m_.dim())) > 1e-9 * scale)
    throw SingularOperator("Operator: inverse check failed, matrix too ill-conditioned");
  symmetric_ = is_symmetric(m_);
  positive_definite_ = symmetric_ && is_positive_definite(m_);
  unitary_ = is_unitary(m_);
}

Operator Operator::scalar(double gamma, int n) {
  if (gamma == 0.0) throw ZeroGamma("Operator: scalar gamma must be nonzero");
  return Operator(gamma * Matrix::identity(n));
}

ConvexSet polar(const ConvexSet& c) {
  struct Visitor {
    ConvexSet operator()(const Ball& b) const { return Ball{1.0 / b.radius}; }
    ConvexSet operator()(const Ellipsoid& e) const { return Ellipsoid{inverse(e.shape)}; }
    ConvexSet operator()(const PolytopeV& p) const { return PolytopeH{HPolyData(p.vertices)}; }
    ConvexSet operator()(const PolytopeH& p) const { return PolytopeV{p.data.rows}; }
    ConvexSet operator()(const ConeV& k) const { return ConeH{HPolyData(k.generators)}; }
    ConvexSet operator()(const ConeH& k) const { return ConeV{k.data.rows}; }
    ConvexSet operator()(const LorentzCone& k) const { return LorentzCone{scaled(k.axis, -1.0)}; }
    ConvexSet operator()(const Orthant& o) const {
      Orthant r = o;
      for (int& s : r.signs) s = -s;
      return r;
    }
    ConvexSet operator()(const Interval& iv) const {
      return Interval{polar_lo(iv.lo), polar_hi(iv.hi)};
    }
  };
  return std::visit(Visitor{}, c);
}

ConvexSet pushforward(const Operator& g, const ConvexSet& c) {
  int d = dim(c);
  if (d != 0 && d != g.dim())
    throw DimensionMismatch("pushforward: operator and set dimensions differ");

  struct Visitor {
    const Operator& g;

    ConvexSet operator()(const Ball& b) const {
      double t = 0.0;
      if (scaled_unitary_factor(g.matrix(), &t)) return Ball{t * b.radius};
      /* General image of a ball is the ellipsoid (G G^T)^{-1} / r^2. */
      Matrix a = transpose(g.inverse_matrix()) * g.inverse_matrix();
      return Ellipsoid{(1.0 / (b.radius * b.radius)) * a};
    }
    ConvexSet operator()(const Ellipsoid& e) const {
      Matrix gi = g.inverse_matrix();
      return Ellipsoid{transpose(gi) * e.shape * gi};
    }
    ConvexSet operator()(const PolytopeV& p) const {
      return PolytopeV{map_points(g.matrix(), p.vertices)};
    }
    ConvexSet operator()(const PolytopeH& p) const {
      return PolytopeH{HPolyData(map_points(g.adjoint_inverse(), p.data.rows))};
    }
    ConvexSet operator()(const ConeV& k) const {
      return ConeV{map_points(g.matrix(), k.generators)};
    }
    ConvexSet operator()(const ConeH& k) const {
      return ConeH{HPolyData(map_points(g.adjoint_inverse(), k.data.rows))};
    }
    ConvexSet operator()(const LorentzCone& k) const {
      double t = 0.0;
      if (!scaled_unitary_factor(g.matrix(), &t))
        throw UnsupportedPushforward(
            "pushforward: Lorentz cone needs a scalar multiple of a unitary map");
      Vector axis = g.matrix() * k.axis;
      return LorentzCone{scaled(axis, 1.0 / norm(axis))};
    }
    ConvexSet operator()(const Orthant& o) const {
      std::vector<int> row_of_col, sign_of_col;
      if (!monomial_pattern(g.matrix(), &row_of_col, &sign_of_col))
        throw UnsupportedPushforward("pushforward: orthant needs a signed permutation");
      Orthant r = o;
      for (size_t k = 0; k < o.signs.size(); ++k)
        r.signs[static_cast<size_t>(row_of_col[k])] = o.signs[k] * sign_of_col[k];
      return r;
    }
    ConvexSet operator()(const Interval& iv) const {
      double gamma = g.matrix()(0, 0);
      double a = gamma * iv.lo, b = gamma * iv.hi;
      /* 0 * inf does not occur: gamma is nonzero by Operator's contract. */
      if (gamma > 0.0) return Interval{a, b};
      return Interval{b, a};
    }
  };
  return std::visit(Visitor{g}, c);
}

ConvexSet polarity_map(const Operator& g, const ConvexSet& c) {
  try {
    return pushforward(g.adjoint_inverse_op(), polar(c));
  } catch (const UnsupportedPushforward&) {
    return polar(pushforward(g, c));
  }
}

}  // namespace polarfix
