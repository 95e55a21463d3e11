#include <doctest.h>

#include "polarfix/errors.hpp"
#include "polarfix/matrix.hpp"
#include "polarfix/rng.hpp"
#include "test_support.hpp"

using namespace polarfix;

TEST_CASE("vector arithmetic") {
  const Vector a{3.0, 4.0};
  CHECK(norm(a) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(dot(a, Vector{1.0, 1.0}) == doctest::Approx(7.0));
  CHECK(norm(normalized(a)) == doctest::Approx(1.0).epsilon(1e-15));
  const Vector s = vec_sub(vec_add(a, a), a);
  CHECK(s[0] == doctest::Approx(3.0));
  CHECK(s[1] == doctest::Approx(4.0));
  CHECK(scaled(a, 0.5)[1] == doctest::Approx(2.0));
  CHECK(unit_vector(3, 1)[1] == 1.0);
  CHECK(norm(zero_vector(4)) == 0.0);
}

TEST_CASE("matrix construction and product") {
  const Matrix m{{1.0, 2.0}, {3.0, 4.0}};
  CHECK(m(0, 1) == 2.0);
  CHECK(m.dim() == 2);
  const Matrix i2 = Matrix::identity(2);
  CHECK(m * i2 == m);
  const Vector v = m * Vector{1.0, 1.0};
  CHECK(v[0] == doctest::Approx(3.0));
  CHECK(v[1] == doctest::Approx(7.0));
  const Matrix d = Matrix::diagonal(Vector{2.0, 5.0});
  CHECK(d(0, 0) == 2.0);
  CHECK(d(1, 0) == 0.0);
  CHECK(max_abs_entry(m - m) == 0.0);
  CHECK(transpose(m)(0, 1) == 3.0);
  CHECK(frobenius_norm(i2) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("inverse solves against identity") {
  Rng rng(7);
  for (int n = 1; n <= 6; ++n) {
    const Matrix a = random_symmetric_mixed(rng, std::max(n, 2), 0.5, 8.0);
    const Matrix e = a * inverse(a) - Matrix::identity(a.dim());
    CHECK(max_abs_entry(e) <= 1e-10);
  }
  CHECK_THROWS_AS((void)inverse(Matrix{{1.0, 2.0}, {2.0, 4.0}}), SingularOperator);
}
