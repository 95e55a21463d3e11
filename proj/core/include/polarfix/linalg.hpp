#pragma once

#include <vector>

#include "polarfix/matrix.hpp"

namespace polarfix {

struct SpectralDecomposition {
  Vector eigenvalues;   // ascending
  Matrix eigenvectors;  // orthonormal columns, column k pairs with eigenvalues[k]
};

/* Cyclic Jacobi for symmetric input (checked to 1e-10 relative).  Eigenvalues
 * come back ascending with a stable sort on ties; each eigenvector's sign is
 * fixed so its largest-magnitude component is positive. */
SpectralDecomposition sym_eig(const Matrix& m);

/* U |diag| U^T for symmetric invertible input.  Throws SingularOperator when
 * any eigenvalue magnitude falls below 1e-10. */
Matrix spectral_abs(const Matrix& m);

/* Largest singular value, via sym_eig of M^T M. */
double operator_norm(const Matrix& m);

/* Best coercivity constant of the quadratic form <Ax,x> on the unit sphere,
 * i.e. lambda_min(A) = 1 / ||A^{-1}||.  Requires positive definite input. */
double coercivity_constant(const Matrix& a);

bool is_symmetric(const Matrix& m);
bool is_positive_definite(const Matrix& m);
bool is_unitary(const Matrix& m);

/* Rows a_i describing {x : <a_i, x> <= 1}.  Rows must be nonzero and share a
 * dimension; redundant rows are accepted as-is. */
struct HPolyData {
  std::vector<Vector> rows;

  HPolyData() = default;
  explicit HPolyData(std::vector<Vector> r);
  int dim() const;
};

/* sup <c,x> over the H-polyhedron.  Throws UnboundedLp when the supremum is
 * infinite. */
double lp_support(const Vector& c, const HPolyData& h);

}  // namespace polarfix
