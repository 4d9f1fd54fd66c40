#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace mbspec {

/// Deterministic random stream for initial-data synthesis.
///
/// mt19937_64 output is fully specified by the standard; the uniform and
/// Gaussian mappings below are spelled out here (rather than taken from
/// std::*_distribution, whose algorithms are implementation-defined) so that
/// identical seeds give bit-identical fields on any toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace mbspec
