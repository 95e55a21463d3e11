#pragma once

#include "polarfix/matrix.hpp"
#include "polarfix/sets.hpp"

namespace polarfix {

/* Invertible linear map with cached inverse/adjoint and detector flags.
 * Construction validates invertibility: ||M M^{-1} - I|| stays below 1e-9. */
class Operator {
 public:
  explicit Operator(Matrix m);
  static Operator scalar(double gamma, int n);

  const Matrix& matrix() const { return m_; }
  const Matrix& inverse_matrix() const { return inv_; }
  const Matrix& adjoint() const { return t_; }
  const Matrix& adjoint_inverse() const { return tinv_; }

  Operator inverse_op() const { return Operator(inv_); }
  Operator adjoint_op() const { return Operator(t_); }
  Operator adjoint_inverse_op() const { return Operator(tinv_); }

  int dim() const { return m_.dim(); }
  bool symmetric() const { return symmetric_; }
  bool positive_definite() const { return positive_definite_; }
  bool unitary() const { return unitary_; }

 private:
  Matrix m_, inv_, t_, tinv_;
  bool symmetric_ = false;
  bool positive_definite_ = false;
  bool unitary_ = false;
};

/* Polar body/cone in the matching representation: ellipsoid shape inverts,
 * V and H polytope data swap roles, Lorentz and orthant reflect, interval
 * endpoints follow the exact reciprocal table. */
ConvexSet polar(const ConvexSet& c);

/* Image GC in closed form.  Throws UnsupportedPushforward when the family
 * cannot express it (Lorentz under non-conformal maps, orthants under
 * non-monomial maps). */
ConvexSet pushforward(const Operator& g, const ConvexSet& c);

/* The polarity-type operator C |-> (GC)0, computed as (G^*)^{-1} C0 and
 * falling back to polar(GC) when that route's pushforward is unsupported. */
ConvexSet polarity_map(const Operator& g, const ConvexSet& c);

}  // namespace polarfix
