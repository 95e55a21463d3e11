#include "polarfix/sampling.hpp"

#include <cmath>
#include <cstdint>

#include "polarfix/errors.hpp"
#include "polarfix/rng.hpp"

namespace polarfix {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kGoldenFrac = 0.61803398874989484820;  // 1/phi

double frac(double x) { return x - std::floor(x); }

/* Van der Corput radical inverse in base 2. */
double vdc2(uint32_t k) {
  k = (k << 16) | (k >> 16);
  k = ((k & 0x00ff00ffu) << 8) | ((k & 0xff00ff00u) >> 8);
  k = ((k & 0x0f0f0f0fu) << 4) | ((k & 0xf0f0f0f0u) >> 4);
  k = ((k & 0x33333333u) << 2) | ((k & 0xccccccccu) >> 2);
  k = ((k & 0x55555555u) << 1) | ((k & 0xaaaaaaaau) >> 1);
  return static_cast<double>(k) * 0x1.0p-32;
}

/* Seed-derived rotation in [0,1), shared by the lattice branches. */
double seed_shift(int seed, int axis) {
  Rng r(static_cast<uint64_t>(seed), 0x5eedull + static_cast<uint64_t>(axis));
  return r.uniform();
}

}  // namespace

Vector sphere_direction(int dim, int index, int seed) {
  if (dim < 1) throw BadParams("sphere_direction: dimension must be positive");
  if (index < 0) throw BadParams("sphere_direction: index must be nonnegative");
  if (index % 2 == 1) return scaled(sphere_direction(dim, index - 1, seed), -1.0);
  int k = index / 2;

  if (dim == 1) return Vector{1.0};

  if (dim == 2) {
    double theta = kTwoPi * frac(k * kGoldenFrac + seed_shift(seed, 0));
    return Vector{std::cos(theta), std::sin(theta)};
  }

  if (dim == 3) {
    double theta = kTwoPi * frac(k * kGoldenFrac + seed_shift(seed, 0));
    double z = 1.0 - 2.0 * frac(vdc2(static_cast<uint32_t>(k) + 1u) + seed_shift(seed, 1));
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return Vector{r * std::cos(theta), r * std::sin(theta), z};
  }

  Rng rng(static_cast<uint64_t>(seed) * 0x9e3779b97f4a7c15ULL + 17u,
          static_cast<uint64_t>(k));
  Vector v(static_cast<size_t>(dim));
  double n = 0.0;
  while (n < 1e-8) {
    for (double& x : v) x = rng.gaussian();
    n = norm(v);
  }
  return scaled(v, 1.0 / n);
}

}  // namespace polarfix
