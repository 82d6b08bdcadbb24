#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace cesaro {

/// Counter-based generator: the value at (seed, stream, counter) is a fixed hash, so any
/// worker can draw stream k without touching the others. Streams are disjoint for
/// distinct (seed, stream) pairs and results never depend on the thread count.
class CounterRng {
 public:
  constexpr CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
      : key_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL))) {}

  constexpr std::uint64_t bits(std::uint64_t counter) const noexcept {
    return mix(key_ + 0x9e3779b97f4a7c15ULL * (counter + 1));
  }

  /// Uniform in (0, 1].
  double uniform(std::uint64_t counter) const noexcept {
    return static_cast<double>((bits(counter) >> 11) + 1) * 0x1.0p-53;
  }

  /// Standard normal pair via Box-Muller on counters (2k, 2k+1).
  void normal_pair(std::uint64_t k, double& a, double& b) const noexcept {
    const double u1 = uniform(2 * k);
    const double u2 = uniform(2 * k + 1);
    const double rad = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * std::numbers::pi * u2;
    a = rad * std::cos(ang);
    b = rad * std::sin(ang);
  }

 private:
  // splitmix64 finalizer
  static constexpr std::uint64_t mix(std::uint64_t x) noexcept {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
  }

  std::uint64_t key_;
};

}  // namespace cesaro
