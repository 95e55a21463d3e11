#pragma once

#include <cstdint>

namespace polarfix {

/* Deterministic stream generator.  splitmix64 keyed by (seed, stream) so that
 * draws depend only on the key, never on call order elsewhere; Box-Muller on
 * top of it keeps gaussians identical across platforms (std::normal_distribution
 * is implementation defined, so it is avoided on purpose). */
class Rng {
 public:
  explicit Rng(uint64_t seed, uint64_t stream = 0)
      : state_(mix(seed + 0x9e3779b97f4a7c15ULL * (stream + 1))) {}

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /* Uniform in [0, 1). */
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double gaussian();

 private:
  static uint64_t mix(uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

  uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace polarfix

#include <cmath>

namespace polarfix {

inline double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  while (u1 == 0.0) u1 = uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 6.283185307179586476925286766559 * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

}  // namespace polarfix
