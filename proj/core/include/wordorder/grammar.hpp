#pragma once

#include <array>
#include <cstddef>

#include "wordorder/order.hpp"
#include "wordorder/random.hpp"

namespace wordorder {

using Probabilities = std::array<double, kOrderCount>;

inline constexpr double kSimplexTolerance = 1e-9;
inline constexpr double kArgmaxTolerance = 1e-12;
inline constexpr double kDefaultMutationVariance = 0.01;

/// A probability distribution over the six word orders.
///
/// Entries are nonnegative and sum to one within kSimplexTolerance; the
/// constructor rejects anything else with std::invalid_argument.
class Grammar {
 public:
  explicit Grammar(const Probabilities& p);

  static Grammar uniform() noexcept;
  static Grammar one_hot(WordOrder order) noexcept;

  double operator[](WordOrder order) const noexcept { return p_[order.index()]; }
  double operator[](std::size_t index) const noexcept { return p_[index]; }
  const Probabilities& probabilities() const noexcept { return p_; }

  double max_probability() const noexcept;

  friend bool operator==(const Grammar&, const Grammar&) = default;

 private:
  struct Unchecked {};
  Grammar(const Probabilities& p, Unchecked) noexcept : p_(p) {}

  Probabilities p_;
};

bool is_valid_distribution(const Probabilities& p) noexcept;

Grammar uniform_grammar() noexcept;

/// Shannon entropy with base-6 logarithm, in [0, 1].
double entropy(const Grammar& g) noexcept;

/// Consumes exactly one uniform draw.
WordOrder sample_order(const Grammar& g, RandomStream& rng);

/// Orders whose probability is within kArgmaxTolerance of the maximum over
/// `candidates`. Returns an empty set only if `candidates` is empty.
OrderSet argmax_orders(const Grammar& g, OrderSet candidates = OrderSet::all()) noexcept;

/// Gaussian perturbation of every entry followed by clamping negatives to
/// zero and renormalizing. Falls back to the uniform grammar when every
/// entry clamps to zero. Draws exactly six normals.
Grammar mutate(const Grammar& g, RandomStream& rng, double variance = kDefaultMutationVariance);

}  // namespace wordorder
