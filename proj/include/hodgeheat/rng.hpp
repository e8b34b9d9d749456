#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace hodgeheat {

/// Deterministic random stream: mt19937_64 engine (portable by the
/// standard) with hand-rolled value transforms so that sampled values do
/// not depend on the standard library's distribution implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Log-uniform in [lo, hi], lo > 0.
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Uniform integer in [0, n).
  int below(int n) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(n)); }

  double gaussian() {
    // Box-Muller; one value per call keeps the stream simple.
    double u1 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

private:
  std::mt19937_64 eng_;
};

}  // namespace hodgeheat
