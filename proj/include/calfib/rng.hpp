#pragma once

#include "calfib/types.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

namespace calfib {

/// Deterministic random source. Hand-rolled transforms so a fixed seed gives
/// the same stream regardless of standard-library distribution internals,
/// and split() derives independent per-sample streams so batch results do
/// not depend on scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(splitmix(seed + 0x9e3779b97f4a7c15ULL)) {}

  std::uint64_t next_u64() {
    state_ = splitmix(state_);
    return state_;
  }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    while (u1 <= 1e-300) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  Vec normal_vec(int dim) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = normal();
    return v;
  }

  /// Uniform direction on the unit sphere in R^dim.
  Vec sphere(int dim) {
    Vec v = normal_vec(dim);
    double n = v.norm();
    while (n < 1e-12) {
      v = normal_vec(dim);
      n = v.norm();
    }
    return v / n;
  }

  /// Independent stream for sample #index; stable under parallel scheduling.
  Rng split(std::uint64_t index) const {
    return Rng(splitmix(state_ ^ (0xbf58476d1ce4e5b9ULL * (index + 1))));
  }

 private:
  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace calfib
