#include <doctest.h>

#include <cmath>
#include <limits>

#include "polarfix/errors.hpp"
#include "polarfix/polarity.hpp"
#include "polarfix/sampling.hpp"
#include "polarfix/verify.hpp"
#include "test_support.hpp"

using namespace polarfix;

namespace {
const double kInfD = std::numeric_limits<double>::infinity();
const double kHalfSqrt2 = std::sqrt(0.5);

ConvexSet square_v(double half = 1.0) {
  return PolytopeV{{{half, half}, {-half, half}, {-half, -half}, {half, -half}}};
}

double sup_gap(const ConvexSet& a, const ConvexSet& b, int n, int dirs = 256) {
  double m = 0.0;
  for (int k = 0; k < dirs; ++k) {
    const Vector u = sphere_direction(n, k, 0);
    m = std::max(m, std::abs(support(a, u) - support(b, u)));
  }
  return m;
}
}  // namespace

TEST_CASE("operator flags") {
  CHECK(Operator(Matrix{{0.25, 0.0}, {0.0, 4.0}}).positive_definite());
  CHECK_FALSE(Operator(Matrix{{0.0, 2.0}, {-1.0, 0.0}}).symmetric());
  CHECK(Operator(Matrix{{kHalfSqrt2, kHalfSqrt2}, {-kHalfSqrt2, kHalfSqrt2}}).unitary());
  CHECK(Operator::scalar(-1.0, 3).symmetric());
  CHECK_THROWS_AS(Operator(Matrix{{1.0, 2.0}, {2.0, 4.0}}), SingularOperator);
  CHECK_THROWS_AS(Operator::scalar(0.0, 2), ZeroGamma);
}

TEST_CASE("polar closed forms") {
  // square -> rhombus
  const ConvexSet rhombus = PolytopeV{{{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}}};
  CHECK(sup_gap(polar(square_v()), rhombus, 2) <= 1e-12);

  const ConvexSet pb = polar(Ball{1.0});
  CHECK(std::get<Ball>(pb).radius == doctest::Approx(1.0));

  const ConvexSet pe = polar(Ellipsoid{Matrix{{0.25, 0.0}, {0.0, 4.0}}});
  CHECK(max_abs_entry(std::get<Ellipsoid>(pe).shape - Matrix{{4.0, 0.0}, {0.0, 0.25}}) <=
        1e-12);
}

TEST_CASE("bipolar returns the body") {
  Rng rng(51);
  for (int rep = 0; rep < 6; ++rep) {
    const int n = 2 + rep % 3;
    const ConvexSet c = rep % 2 == 0
                            ? ConvexSet(random_ellipsoid(rng, n))
                            : ConvexSet(random_symmetric_polytope(rng, n, n + 3));
    const ResidualReport r = support_residual(c, polar(polar(c)), 256, 0, 1e-9);
    CHECK(r.max_residual <= 1e-9);
  }
}

TEST_CASE("polar scaling is reciprocal") {
  CHECK(std::get<Ball>(polar(Ball{2.0})).radius == doctest::Approx(0.5));
  // interval table, including the infinite endpoints
  const Interval piv = std::get<Interval>(polar(Interval{-0.5, 2.0}));
  CHECK(piv.lo == doctest::Approx(-2.0));
  CHECK(piv.hi == doctest::Approx(0.5));
  const Interval pray = std::get<Interval>(polar(Interval{-kInfD, 0.0}));
  CHECK(pray.lo == 0.0);
  CHECK(pray.hi == kInfD);
}

TEST_CASE("pushforward closed forms") {
  const ConvexSet b2 = pushforward(Operator::scalar(2.0, 2), Ball{1.0});
  CHECK(std::get<Ball>(b2).radius == doctest::Approx(2.0));

  const Operator g(Matrix{{4.0, 0.0}, {0.0, 0.25}});
  const ConvexSet e =
      pushforward(g, Ellipsoid{Matrix{{4.0, 0.0}, {0.0, 0.25}}});
  CHECK(max_abs_entry(std::get<Ellipsoid>(e).shape - Matrix{{0.25, 0.0}, {0.0, 4.0}}) <=
        1e-12);
  // gauge transport law gauge(GC, x) = gauge(C, G^-1 x)
  const ConvexSet c0 = Ellipsoid{Matrix{{4.0, 0.0}, {0.0, 0.25}}};
  for (int k = 0; k < 512; ++k) {
    const Vector x = scaled(sphere_direction(2, k, 0), 1.7);
    CHECK(gauge(e, x) ==
          doctest::Approx(gauge(c0, g.inverse_matrix() * x)).epsilon(1e-10));
  }

  const ConvexSet o = pushforward(Operator::scalar(-1.0, 2), Orthant{{1, 1}});
  CHECK(std::get<Orthant>(o).signs == std::vector<int>{-1, -1});
}

TEST_CASE("polarity_map identity operator is the polar") {
  const ConvexSet c = square_v();
  CHECK(sup_gap(polarity_map(Operator(Matrix::identity(2)), c), polar(c), 2) <= 1e-12);
}

TEST_CASE("polarity_map fixed point of a diagonal operator") {
  const Operator g(Matrix{{0.25, 0.0}, {0.0, 4.0}});
  const ConvexSet c = Ellipsoid{Matrix{{0.25, 0.0}, {0.0, 4.0}}};
  CHECK(sup_gap(polarity_map(g, c), c, 2) <= 1e-12);
}

TEST_CASE("polarity_map of the square under a semi-skew operator") {
  const Operator g(Matrix{{0.0, 2.0}, {-1.0, 0.0}});
  const ConvexSet image = polarity_map(g, square_v());
  // image is the rhombus with semi-axes 1/2 and 1; the support gap
  // |u1|+|u2| - max(|u1|/2, |u2|) peaks at tan(theta) = 1/2 with value 2/sqrt(5)
  CHECK(support(image, Vector{1.0, 0.0}) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(support(image, Vector{0.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-12));
  const double gap = sup_gap(square_v(), image, 2, 4096);
  const double peak = 2.0 / std::sqrt(5.0);
  CHECK(gap <= peak + 1e-12);
  CHECK(gap >= peak - 1e-3);
}

TEST_CASE("both routes agree when both apply") {
  Rng rng(61);
  for (int rep = 0; rep < 6; ++rep) {
    const int n = 2 + rep % 2;
    Matrix m(n);
    do {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rng.uniform(-2.0, 2.0);
    } while (std::abs(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) < 0.1 && n == 2);
    Operator g(m);
    const ConvexSet c = random_ellipsoid(rng, n);
    const ConvexSet via_polar = pushforward(g.adjoint_inverse_op(), polar(c));
    const ConvexSet via_image = polar(pushforward(g, c));
    CHECK(sup_gap(via_polar, via_image, n) <= 1e-9);
  }
}

TEST_CASE("cone polarity") {
  const ConvexSet lk = polarity_map(Operator::scalar(-1.0, 3), LorentzCone{{0.0, 0.0, 1.0}});
  const ResidualReport lr = cone_residual(lk, LorentzCone{{0.0, 0.0, 1.0}}, 2000, 0);
  CHECK(lr.disagreements == 0);

  const ConvexSet ok = polarity_map(Operator::scalar(-1.0, 3), Orthant{{1, 1, 1}});
  const ResidualReport orr = cone_residual(ok, Orthant{{1, 1, 1}}, 2000, 0);
  CHECK(orr.disagreements == 0);
}

TEST_CASE("interval polarity under the scalar equation") {
  const Operator flip = Operator::scalar(-1.0, 1);
  const Interval fixed = std::get<Interval>(polarity_map(flip, Interval{-0.5, 2.0}));
  CHECK(fixed.lo == doctest::Approx(-0.5));
  CHECK(fixed.hi == doctest::Approx(2.0));

  // [0, 2] is not a solution: the image picks up an infinite end
  const Interval moved = std::get<Interval>(polarity_map(flip, Interval{0.0, 2.0}));
  CHECK(moved.lo == doctest::Approx(-0.5));
  CHECK(moved.hi == kInfD);

  const Interval ray = std::get<Interval>(polarity_map(flip, Interval{-kInfD, 0.0}));
  CHECK(ray.lo == -kInfD);
  CHECK(ray.hi == 0.0);
}
