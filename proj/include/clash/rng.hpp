#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace clash {

/// One SplitMix64 step. Used only for deriving sub-stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic seed for a named sub-stream of a parent seed.
///
/// Every consumer of randomness owns a numbered stream: an instance seed
/// splits into streams 1..4 (sensing matrix, support, amplitudes, noise),
/// a Monte Carlo master seed splits into one stream per trial index. Distinct
/// (seed, stream) pairs give independent-looking engines.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t state = seed ^ (0xd1b54a32d192ed03ULL * (stream + 1));
  const std::uint64_t a = splitmix64(state);
  const std::uint64_t b = splitmix64(state);
  return a ^ (b << 1);
}

/// Seedable random generator with explicitly coded output transformations.
///
/// The engine is std::mt19937_64, whose bit stream is fixed by the standard,
/// and the uniform/normal maps are spelled out below rather than delegated to
/// std::*_distribution (whose output is implementation-defined). The same
/// seed therefore reproduces the same draws everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(engine_() >> 11) * kInv53; }

  /// Uniform on (0, 1]; safe as a log() argument.
  double uniform01_positive() {
    return static_cast<double>((engine_() >> 11) + 1) * kInv53;
  }

  /// Standard normal via Box-Muller, cosine branch only (no cached spare,
  /// so the draw count per call is constant).
  double normal() {
    const double u1 = uniform01_positive();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

  /// Unbiased uniform integer in [0, bound), bound >= 1.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t v = engine_();
      if (v >= threshold) return v % bound;
    }
  }

  /// Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(uniform_below(
                    static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  static constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53
  static constexpr double kTwoPi = 6.283185307179586476925286766559;
  std::mt19937_64 engine_;
};

}  // namespace clash
