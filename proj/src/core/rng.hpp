#pragma once

#include <cstdint>
#include <random>

#include "core/rational.hpp"

namespace su3t {

/// Deterministic RNG wrapper: identical sequences on every platform (the
/// std distributions are implementation-defined, so we avoid them).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  /// uniform in [lo, hi], inclusive
  long uniform_int(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(eng_() % span);
  }

  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// standard normal via Box-Muller (one value per call; deterministic)
  double normal() {
    double u1 = uniform01(), u2 = uniform01();
    while (u1 <= 1e-300) u1 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  Rat rational(long num_range, long den_range) {
    Rat r(uniform_int(-num_range, num_range), uniform_int(1, den_range));
    r.canonicalize();
    return r;
  }

  /// Independent child stream (seeded from this stream's state)
  Rng spawn(std::uint64_t salt) { return Rng(eng_() ^ (salt * 0x9E3779B97F4A7C15ull)); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace su3t
