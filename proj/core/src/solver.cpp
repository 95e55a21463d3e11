#include "polarfix/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polarfix/errors.hpp"
#include "polarfix/linalg.hpp"

namespace polarfix {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kHalfPi = 1.57079632679489661923;

/* Scalar multiple of the identity?  Returns the scalar if so. */
std::optional<double> scalar_multiple(const Matrix& m) {
  const int n = m.dim();
  double t = 0.0;
  for (int i = 0; i < n; ++i) t += m(i, i);
  t /= n;
  const Matrix diff = m - (t * Matrix::identity(n));
  if (max_abs_entry(diff) > hybrid_tol(max_abs_entry(m))) return std::nullopt;
  return t;
}

ConvexSet specialize_shape(const Matrix& a) {
  if (a.dim() == 1) {
    const double r = 1.0 / std::sqrt(a(0, 0));
    return Interval{-r, r};
  }
  if (auto t = scalar_multiple(a)) return Ball{1.0 / std::sqrt(*t)};
  return Ellipsoid{a};
}

}  // namespace

ConvexSet solve_positive_definite(const Operator& g) {
  if (!g.positive_definite())
    throw NotPositiveDefinite("operator must be symmetric positive definite");
  return specialize_shape(g.matrix());
}

std::pair<Matrix, ConvexSet> solve_symmetric(const Operator& g) {
  if (!g.symmetric()) throw NotSymmetric("operator must be symmetric");
  const Matrix a = spectral_abs(g.matrix());
  return {a, specialize_shape(a)};
}

double operator_equation_residual(const Matrix& a, const Operator& g) {
  // G A^{-1} G^* is symmetric for any G, so the residual is too
  const Matrix lhs = a - g.matrix() * inverse(a) * g.adjoint();
  return operator_norm(lhs);
}

double transport_residual(const Operator& a, const Operator& g) {
  const Matrix lhs = a.adjoint_inverse() * g.matrix() * a.inverse_matrix() - g.matrix();
  return operator_norm(lhs);
}

ConvexSet transport_solution(const Operator& a, const ConvexSet& c) {
  return pushforward(a, c);
}

Interval OneDimSolutionFamily::family_member(double b) const {
  if (!has_family) throw BadParams("no interval family for this gamma");
  if (!(b > 0.0)) throw BadParams("family parameter must be positive");
  return Interval{1.0 / (gamma * b), b};
}

std::array<Interval, 2> OneDimSolutionFamily::rays() const {
  if (!has_family) throw BadParams("no ray solutions for this gamma");
  return {Interval{-kInf, 0.0}, Interval{0.0, kInf}};
}

OneDimSolutionFamily classify_1d(double gamma) {
  if (gamma == 0.0) throw ZeroGamma("gamma must be nonzero");
  OneDimSolutionFamily out;
  out.gamma = gamma;
  if (gamma > 0.0) {
    const double r = 1.0 / std::sqrt(gamma);
    out.unique = Interval{-r, r};
  } else {
    out.has_family = true;
  }
  return out;
}

namespace {

Matrix frame_matrix(const Vector& u, const Vector& up, double a1, double a2) {
  const Matrix b{{u[0], up[0]}, {u[1], up[1]}};
  const Matrix k{{0.0, a2}, {-a1, 0.0}};
  return b * k * transpose(b);
}

struct FrameCandidate {
  Vector u, up;
  double a1 = 0.0, a2 = 0.0;
};

FrameCandidate frame_at(const Matrix& m, double theta, double handed) {
  FrameCandidate f;
  f.u = Vector{std::cos(theta), std::sin(theta)};
  f.up = Vector{-handed * f.u[1], handed * f.u[0]};
  const Vector mu = m * f.u;
  const Vector mup = m * f.up;
  f.a1 = -dot(mu, f.up);
  f.a2 = dot(mup, f.u);
  return f;
}

}  // namespace

SemiSkewForm semi_skew_decompose(const Matrix& m, double tol) {
  if (m.dim() != 2)
    throw NotSemiSkew(SemiSkewRejection::wrong_dimension,
                      "decomposition defined for 2x2 operators");
  const double scale = std::max(1.0, max_abs_entry(m));
  const double tr = m(0, 0) + m(1, 1);
  if (std::abs(tr) > tol * scale)
    throw NotSemiSkew(SemiSkewRejection::nonzero_trace, "trace must vanish");
  const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (det <= tol * scale * scale)
    throw NotSemiSkew(SemiSkewRejection::nonpositive_determinant,
                      "determinant must be positive");
  // M^T M = det I exactly when a1 = a2, i.e. M is a scaled rotation
  const Matrix mtm = transpose(m) * m;
  const Matrix dev = mtm - (det * Matrix::identity(2));
  if (max_abs_entry(dev) <= tol * scale * scale)
    throw NotSemiSkew(SemiSkewRejection::scaled_rotation,
                      "scaled rotations are skew, not strictly semi-skew");

  /* The frame angle solves <M u, u> = 0.  Writing u = (cos t, sin t) and
   * using the zero trace, that condition reads m00 cos 2t + q sin 2t = 0
   * with q = (m01 + m10)/2, so 2t = atan2(-m00, q) works; t + pi/2 is the
   * other root and swaps the alphas.  The handedness of the frame follows
   * the sign of the skew part: it makes both alphas positive (their product
   * is det > 0, their sum is twice the absolute skew coefficient). */
  const double skew = (m(0, 1) - m(1, 0)) / 2.0;
  const double handed = skew >= 0.0 ? 1.0 : -1.0;
  const double theta = std::atan2(-m(0, 0), (m(0, 1) + m(1, 0)) / 2.0) / 2.0;

  FrameCandidate f = frame_at(m, theta, handed);
  if (f.a1 > f.a2) f = frame_at(m, theta + kHalfPi, handed);
  if (f.u[0] < -kAbsTol || (std::abs(f.u[0]) <= kAbsTol && f.u[1] < 0.0)) {
    f.u = scaled(f.u, -1.0);  // fix the overall sign of the frame
    f.up = scaled(f.up, -1.0);
  }

  SemiSkewForm out;
  out.u = f.u;
  out.u_perp = f.up;
  out.alpha1 = f.a1;
  out.alpha2 = f.a2;
  out.e = frame_matrix(f.u, f.up, f.a1, f.a2);
  out.e_adjoint = frame_matrix(f.u, f.up, -f.a2, -f.a1);
  out.e_inverse = frame_matrix(f.u, f.up, -1.0 / f.a2, -1.0 / f.a1);
  out.e_inv_adjoint = out.e_inverse * out.e_adjoint;

  const Matrix back = out.e - m;
  if (max_abs_entry(back) > 1e-9 * scale)
    throw NotSemiSkew(SemiSkewRejection::scaled_rotation,
                      "reconstruction mismatch; conditioning too poor");
  return out;
}

namespace {

/* Support gap between two sets over sampled directions. */
double set_residual(const ConvexSet& a, const ConvexSet& b, int dirs, unsigned seed,
                    double tol) {
  const ResidualReport rep = support_residual(a, b, dirs, seed, tol);
  return rep.max_residual;
}

}  // namespace

IterationTrace iterate_polarity(const Operator& g, const ConvexSet& c0, int max_steps,
                                double tol, const VerifyConfig& config) {
  if (max_steps < 1) throw BadParams("need at least one step");
  IterationTrace trace;
  trace.iterates.push_back(c0);
  double min_self = kInf;

  for (int k = 0; k < max_steps; ++k) {
    const ConvexSet& cur = trace.iterates.back();
    const ConvexSet next = polarity_map(g, cur);

    const double self_res = set_residual(cur, next, config.dirs, config.seed, tol);
    trace.self_residuals.push_back(self_res);
    min_self = std::min(min_self, self_res);
    if (self_res <= tol) {
      trace.verdict = IterationTrace::Verdict::converged;
      trace.converged_step = k;
      break;
    }
    if (k == max_steps - 1) break;

    trace.iterates.push_back(next);
    trace.consecutive_residuals.push_back(self_res);

    /* Cycle scan: compare the newest iterate against its recent predecessors.
     * Period 2 is the generic polarity cycle; up to 4 covers products. */
    const int count = static_cast<int>(trace.iterates.size());
    for (int p = 2; p <= 4 && p < count; ++p) {
      const double gap =
          set_residual(trace.iterates[count - 1], trace.iterates[count - 1 - p],
                       config.dirs, config.seed, tol);
      if (gap <= tol) {
        trace.verdict = IterationTrace::Verdict::cycled;
        trace.cycle_period = p;
        trace.min_self_residual = min_self;
        return trace;
      }
    }
  }

  trace.min_self_residual = min_self;
  return trace;
}

}  // namespace polarfix
