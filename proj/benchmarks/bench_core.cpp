#include <benchmark/benchmark.h>

#include <cmath>

#include "polarfix/conjugate.hpp"
#include "polarfix/linalg.hpp"
#include "polarfix/polarity.hpp"
#include "polarfix/rng.hpp"
#include "polarfix/sampling.hpp"
#include "polarfix/sets.hpp"
#include "polarfix/solver.hpp"
#include "polarfix/verify.hpp"

using namespace polarfix;

namespace {

Matrix seeded_spd(int n) {
  Rng rng(17);
  Matrix q = Matrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double t = rng.uniform(0.0, 6.28318530717958648);
      Matrix g = Matrix::identity(n);
      g(i, i) = g(j, j) = std::cos(t);
      g(i, j) = -std::sin(t);
      g(j, i) = std::sin(t);
      q = q * g;
    }
  Vector lam(static_cast<size_t>(n));
  for (double& l : lam) l = 0.25 * std::exp(rng.uniform() * std::log(16.0));
  return q * Matrix::diagonal(lam) * transpose(q);
}

PolytopeV seeded_polytope(int n, int verts) {
  Rng rng(23);
  std::vector<Vector> v;
  for (int k = 0; k < verts; ++k) {
    Vector x(static_cast<size_t>(n));
    for (double& e : x) e = rng.gaussian();
    x = scaled(x, rng.uniform(0.5, 2.0) / norm(x));
    v.push_back(x);
    v.push_back(scaled(x, -1.0));
  }
  return PolytopeV{v};
}

void BM_GaugeEllipsoid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ConvexSet c = Ellipsoid{seeded_spd(n)};
  const Vector x = sphere_direction(n, 5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(gauge(c, x));
}
BENCHMARK(BM_GaugeEllipsoid)->Arg(2)->Arg(6)->Arg(16);

void BM_SupportPolytopeLp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ConvexSet c = polar(ConvexSet(seeded_polytope(n, n + 6)));
  const Vector u = sphere_direction(n, 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(support(c, u));
}
BENCHMARK(BM_SupportPolytopeLp)->Arg(3)->Arg(6);

void BM_SymEig(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Matrix m = seeded_spd(n);
  for (auto _ : state) benchmark::DoNotOptimize(sym_eig(m).eigenvalues.back());
}
BENCHMARK(BM_SymEig)->Arg(4)->Arg(8)->Arg(16);

void BM_SolveAndVerify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Operator g(seeded_spd(n));
  for (auto _ : state) {
    const ConvexSet c = solve_positive_definite(g);
    benchmark::DoNotOptimize(verify_fixed_point(g, c).max_residual);
  }
}
BENCHMARK(BM_SolveAndVerify)->Arg(2)->Arg(6);

void BM_IterateSemiSkew(benchmark::State& state) {
  const Operator g(Matrix{{0.0, 2.0}, {-1.0, 0.0}});
  const ConvexSet sq = PolytopeV{{{1.0, 1.0}, {-1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}}};
  for (auto _ : state)
    benchmark::DoNotOptimize(iterate_polarity(g, sq, 50, 1e-8).min_self_residual);
}
BENCHMARK(BM_IterateSemiSkew);

void BM_LegendreGrid1D(benchmark::State& state) {
  const GridSpec spec = GridSpec::centered(4.0, static_cast<int>(state.range(0)), 1);
  const GridFunction f = sample_grid(spec, [](const Vector& x) { return 0.5 * x[0] * x[0]; });
  for (auto _ : state) benchmark::DoNotOptimize(legendre_grid(f).values.back());
}
BENCHMARK(BM_LegendreGrid1D)->Arg(129)->Arg(513);

void BM_LegendreGrid2D(benchmark::State& state) {
  const GridSpec spec = GridSpec::centered(4.0, static_cast<int>(state.range(0)), 2);
  const Matrix a{{2.0, 0.0}, {0.0, 3.0}};
  const GridFunction f =
      sample_grid(spec, [&](const Vector& x) { return 0.5 * dot(a * x, x); });
  for (auto _ : state) benchmark::DoNotOptimize(legendre_grid(f).values.back());
}
BENCHMARK(BM_LegendreGrid2D)->Arg(65)->Arg(129)->Arg(257);

}  // namespace

BENCHMARK_MAIN();
