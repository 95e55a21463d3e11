#pragma once

#include <initializer_list>
#include <vector>

namespace polarfix {

using Vector = std::vector<double>;

/* Tolerances are absolute-relative hybrids throughout: a comparison at scale s
 * passes below kAbsTol + kRelTol * s. */
inline constexpr double kAbsTol = 1e-10;
inline constexpr double kRelTol = 1e-9;

inline double hybrid_tol(double scale) { return kAbsTol + kRelTol * scale; }

double dot(const Vector& a, const Vector& b);
double norm(const Vector& v);
Vector scaled(const Vector& v, double s);
Vector vec_add(const Vector& a, const Vector& b);
Vector vec_sub(const Vector& a, const Vector& b);
/* Throws BadParams on the zero vector. */
Vector normalized(const Vector& v);
Vector zero_vector(int n);
Vector unit_vector(int n, int k);

/* Dense square matrix, row major.  Entries are validated finite on
 * construction; dimension is fixed for the lifetime of the object. */
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n);
  Matrix(int n, std::vector<double> entries);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(int n);
  static Matrix diagonal(const Vector& d);

  int dim() const { return n_; }
  double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  bool operator==(const Matrix& o) const = default;

 private:
  int n_ = 0;
  std::vector<double> a_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& m);
Vector operator*(const Matrix& m, const Vector& v);

Matrix transpose(const Matrix& m);
/* Gauss-Jordan with partial pivoting; throws SingularOperator when a pivot
 * falls below the hybrid tolerance at the matrix's scale. */
Matrix inverse(const Matrix& m);
double frobenius_norm(const Matrix& m);
double max_abs_entry(const Matrix& m);

}  // namespace polarfix
