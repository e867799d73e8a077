// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "mtlra/errors.hpp"

namespace mtlra {

// Seeded random stream with fully specified sampling algorithms.
//
// The engine is std::mt19937_64 (bit-exact across platforms by the C++
// standard) and all distributions are implemented here from raw 64-bit
// draws, because the std:: distribution adaptors are implementation
// defined. Same seed -> same sequence, everywhere.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  const std::string& algorithm() const { return algorithm_; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1), never returns an endpoint. Used for log/Box-Muller
  // transforms so that sampled gains stay strictly positive.
  double uniform_open01() {
    return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Unbiased integer in [0, n). Rejection sampling on the top bits.
  std::uint64_t uniform_index(std::uint64_t n) {
    if (n == 0) throw ArgumentError("uniform_index: n must be positive");
    const std::uint64_t threshold = (~n + 1) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t x = next_u64();
      if (x >= threshold) return x % n;
    }
  }

  // Box-Muller; consumes exactly two 64-bit draws per sample.
  double normal(double mu, double sigma) {
    if (sigma < 0.0) throw ArgumentError("normal: sigma must be non-negative");
    const double u1 = uniform_open01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mu + sigma * r * std::cos(2.0 * kPi * u2);
  }

  // Exponential with the given mean; strictly positive.
  double exponential(double mean = 1.0) {
    if (mean <= 0.0) throw ArgumentError("exponential: mean must be positive");
    return -mean * std::log(uniform_open01());
  }

  // Deterministic sub-seed derivation (splitmix64 finalizer chain). Used to
  // give every (repetition, task, row, purpose) its own independent stream.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t a = 0,
                              std::uint64_t b = 0, std::uint64_t c = 0) {
    return mix(mix(mix(mix(seed) + a) + b) + c);
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::string algorithm_ = "mt19937_64";
  std::mt19937_64 engine_;
};

// Stable purpose tags for derived streams. Changing these values changes
// every dataset and training trajectory, so they are frozen.
namespace seed_tag {
inline constexpr std::uint64_t kData = 1;
inline constexpr std::uint64_t kThetaInit = 2;
inline constexpr std::uint64_t kPhiInit = 3;
inline constexpr std::uint64_t kBatch = 4;
inline constexpr std::uint64_t kTaskSelect = 5;
inline constexpr std::uint64_t kRepetition = 6;
inline constexpr std::uint64_t kScheme = 7;
}  // namespace seed_tag

}  // namespace mtlra
