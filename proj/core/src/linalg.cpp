#include "polarfix/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "polarfix/errors.hpp"
#include "polarfix/lp.hpp"

namespace polarfix {

bool is_symmetric(const Matrix& m) {
  double scale = std::max(1.0, frobenius_norm(m));
  return frobenius_norm(m - transpose(m)) <= 1e-10 * scale;
}

bool is_positive_definite(const Matrix& m) {
  if (!is_symmetric(m)) return false;
  SpectralDecomposition d = sym_eig(m);
  return d.eigenvalues.front() > 1e-10;
}

bool is_unitary(const Matrix& m) {
  double scale = std::max(1.0, frobenius_norm(m));
  return frobenius_norm(transpose(m) * m - Matrix::identity(m.dim())) <= 1e-10 * scale;
}

static double offdiag_norm(const Matrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

SpectralDecomposition sym_eig(const Matrix& m) {
  if (!is_symmetric(m)) throw NotSymmetric("sym_eig: input not symmetric");
  int n = m.dim();
  Matrix a = 0.5 * (m + transpose(m));
  Matrix v = Matrix::identity(n);
  double scale = std::max(1.0, frobenius_norm(a));

  /* Cyclic sweeps; each rotation zeroes one off-diagonal pair. */
  for (int sweep = 0; sweep < 100 && offdiag_norm(a) > 1e-14 * scale; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        if (std::fabs(apq) <= 1e-300) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i) < a(j, j); });

  SpectralDecomposition out;
  out.eigenvalues.resize(static_cast<size_t>(n));
  out.eigenvectors = Matrix(n);
  for (int k = 0; k < n; ++k) {
    int src = order[static_cast<size_t>(k)];
    out.eigenvalues[static_cast<size_t>(k)] = a(src, src);
    int peak = 0;
    for (int i = 1; i < n; ++i)
      if (std::fabs(v(i, src)) > std::fabs(v(peak, src))) peak = i;
    double sign = v(peak, src) >= 0.0 ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = sign * v(i, src);
  }
  return out;
}

Matrix spectral_abs(const Matrix& m) {
  SpectralDecomposition d = sym_eig(m);
  for (double lam : d.eigenvalues)
    if (std::fabs(lam) < 1e-10)
      throw SingularOperator("spectral_abs: eigenvalue magnitude below 1e-10");
  int n = m.dim();
  Matrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k)
        s += d.eigenvectors(i, k) * std::fabs(d.eigenvalues[static_cast<size_t>(k)]) *
             d.eigenvectors(j, k);
      r(i, j) = s;
    }
  return 0.5 * (r + transpose(r));
}

double operator_norm(const Matrix& m) {
  SpectralDecomposition d = sym_eig(transpose(m) * m);
  double lam = d.eigenvalues.back();
  return std::sqrt(std::max(lam, 0.0));
}

double coercivity_constant(const Matrix& a) {
  if (!is_positive_definite(a))
    throw NotPositiveDefinite("coercivity_constant: input not positive definite");
  return sym_eig(a).eigenvalues.front();
}

HPolyData::HPolyData(std::vector<Vector> r) : rows(std::move(r)) {
  if (rows.empty()) throw BadParams("HPolyData: no rows");
  size_t n = rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != n) throw DimensionMismatch("HPolyData: row length mismatch");
    if (norm(row) == 0.0) throw BadParams("HPolyData: zero row");
  }
}

int HPolyData::dim() const { return static_cast<int>(rows.front().size()); }

double lp_support(const Vector& c, const HPolyData& h) {
  if (static_cast<int>(c.size()) != h.dim())
    throw DimensionMismatch("lp_support: direction dimension mismatch");
  return maximize_under_unit_rows(c, h.rows).value;
}

}  // namespace polarfix
