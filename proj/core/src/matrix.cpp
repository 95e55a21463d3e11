#include "polarfix/matrix.hpp"

#include <cmath>
#include <cstddef>

#include "polarfix/errors.hpp"

namespace polarfix {

double dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vector& v) { return std::sqrt(dot(v, v)); }

Vector scaled(const Vector& v, double s) {
  Vector r(v);
  for (double& x : r) x *= s;
  return r;
}

Vector vec_add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vec_add: length mismatch");
  Vector r(a);
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Vector vec_sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vec_sub: length mismatch");
  Vector r(a);
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

Vector normalized(const Vector& v) {
  double n = norm(v);
  if (n == 0.0) throw BadParams("normalized: zero vector");
  return scaled(v, 1.0 / n);
}

Vector zero_vector(int n) { return Vector(static_cast<size_t>(n), 0.0); }

Vector unit_vector(int n, int k) {
  Vector v = zero_vector(n);
  v[static_cast<size_t>(k)] = 1.0;
  return v;
}

static void check_finite(const std::vector<double>& a, const char* what) {
  for (double x : a)
    if (!std::isfinite(x)) throw BadParams(std::string(what) + ": non-finite entry");
}

Matrix::Matrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {
  if (n <= 0) throw BadParams("Matrix: dimension must be positive");
}

Matrix::Matrix(int n, std::vector<double> entries) : n_(n), a_(std::move(entries)) {
  if (n <= 0) throw BadParams("Matrix: dimension must be positive");
  if (a_.size() != static_cast<size_t>(n) * n) throw BadParams("Matrix: entry count mismatch");
  check_finite(a_, "Matrix");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  n_ = static_cast<int>(rows.size());
  if (n_ == 0) throw BadParams("Matrix: empty");
  a_.reserve(static_cast<size_t>(n_) * n_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_) throw BadParams("Matrix: ragged rows");
    a_.insert(a_.end(), row.begin(), row.end());
  }
  check_finite(a_, "Matrix");
}

Matrix Matrix::identity(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<size_t>(i)];
  return m;
}

static void check_same_dim(const Matrix& a, const Matrix& b, const char* what) {
  if (a.dim() != b.dim()) throw DimensionMismatch(std::string(what) + ": dimension mismatch");
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  check_same_dim(a, b, "operator+");
  Matrix r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  check_same_dim(a, b, "operator-");
  Matrix r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  check_same_dim(a, b, "operator*");
  int n = a.dim();
  Matrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

Matrix operator*(double s, const Matrix& m) {
  Matrix r(m);
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r(i, j) = s * m(i, j);
  return r;
}

Vector operator*(const Matrix& m, const Vector& v) {
  if (static_cast<int>(v.size()) != m.dim())
    throw DimensionMismatch("matrix-vector product: dimension mismatch");
  Vector r(v.size(), 0.0);
  for (int i = 0; i < m.dim(); ++i) {
    double s = 0.0;
    for (int j = 0; j < m.dim(); ++j) s += m(i, j) * v[static_cast<size_t>(j)];
    r[static_cast<size_t>(i)] = s;
  }
  return r;
}

Matrix transpose(const Matrix& m) {
  Matrix r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r(j, i) = m(i, j);
  return r;
}

Matrix inverse(const Matrix& m) {
  int n = m.dim();
  Matrix a(m);
  Matrix inv = Matrix::identity(n);
  double pivot_floor = hybrid_tol(frobenius_norm(m));
  for (int col = 0; col < n; ++col) {
    int best = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(a(r, col)) > std::fabs(a(best, col))) best = r;
    if (std::fabs(a(best, col)) <= pivot_floor)
      throw SingularOperator("inverse: singular matrix");
    if (best != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a(best, j), a(col, j));
        std::swap(inv(best, j), inv(col, j));
      }
    }
    double p = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      double f = a(r, col);
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

double frobenius_norm(const Matrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) s += m(i, j) * m(i, j);
  return std::sqrt(s);
}

double max_abs_entry(const Matrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) s = std::max(s, std::fabs(m(i, j)));
  return s;
}

}  // namespace polarfix
