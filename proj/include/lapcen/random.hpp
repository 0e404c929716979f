#pragma once

#include <cstdint>
#include <random>

namespace lapcen {

/// SplitMix64 finalizer; used to derive well-mixed seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Portable seeded generator.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Distributions are implemented here rather than taken from
/// <random>, whose algorithms differ between standard libraries. Stream s of
/// seed x is seeded with splitmix64(x + 0x9E3779B97F4A7C15 * (s + 1)).
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform integer on [0, bound), bound > 0, by rejection (no modulo bias).
  std::uint64_t below(std::uint64_t bound);
  bool bernoulli(double p) { return uniform() < p; }
  /// Standard normal via Box-Muller.
  double normal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace lapcen
