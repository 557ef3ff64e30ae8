#pragma once

#include <span>
#include <string>
#include <vector>

#include "wordorder/random.hpp"

namespace wordorder {

inline constexpr double kDefaultFlipProbability = 0.01;

struct NoiseParams {
  double flip_probability = kDefaultFlipProbability;
  /// When true a flipped letter always becomes a different letter, so
  /// flip_probability is the exact per-letter corruption rate. When false
  /// the replacement is uniform over the whole alphabet.
  bool exclude_self = true;

  /// Throws std::invalid_argument unless 0 <= flip_probability <= 1.
  void validate() const;
};

/// Independently replaces each letter of each token with probability
/// flip_probability. Token count and lengths are preserved. Every letter
/// consumes one uniform draw, plus one more when it flips.
std::vector<std::string> apply_noise(std::span<const std::string> tokens, const NoiseParams& params,
                                     RandomStream& rng);

/// In-place form of apply_noise with identical draws.
void apply_noise_in_place(std::span<std::string> tokens, const NoiseParams& params,
                          RandomStream& rng);

}  // namespace wordorder
