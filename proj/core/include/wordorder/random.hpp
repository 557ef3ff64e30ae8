#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace wordorder {

/// Seedable pseudo-random stream.
///
/// Every stochastic operation takes a RandomStream by reference, so a
/// computation is reproducible given the seed its stream was built from.
/// Independent streams are obtained with derive(), which hashes a path of
/// integer keys (generation, grammar index, trial index, ...) into a fresh
/// seed. Two streams derived from different paths are statistically
/// independent, which is what lets population evaluation run on several
/// threads and still match the sequential result bit for bit.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  static RandomStream derive(std::uint64_t seed, std::initializer_list<std::uint64_t> path);

  /// Uniform on [0, 1).
  double uniform();

  /// Uniform on {0, ..., n - 1}; n must be positive.
  std::size_t uniform_index(std::size_t n);

  bool bernoulli(double p) { return uniform() < p; }

  double normal(double mean, double stddev);

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; used to mix seed paths.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace wordorder
