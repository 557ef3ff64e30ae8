#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "wordorder/grammar.hpp"
#include "wordorder/order.hpp"

namespace wordorder {

using Rational = boost::rational<std::int64_t>;
using RationalDistribution = std::array<Rational, kOrderCount>;

inline Rational to_rational(RoleDistance d) {
  return Rational(d.mismatches(), RoleDistance::denominator());
}

std::string to_string(const Rational& r);

/// How the hearer turns a grammar into an order.
enum class HearerModel {
  Sampling,  ///< draws order j with probability p_j, independently of the speaker
  Argmax,    ///< uniform over the most probable orders
};

std::string_view to_string(HearerModel model) noexcept;

/// Throws std::invalid_argument unless entries are nonnegative and sum to 1.
void require_distribution(const RationalDistribution& p);

bool is_vertex(const RationalDistribution& p);

/// sum_ij speaker_i * d_ij * hearer_j
Rational expected_distance_sampling(const RationalDistribution& speaker,
                                    const RationalDistribution& hearer);
double expected_distance_sampling(const Grammar& speaker, const Grammar& hearer);

/// Mean over j in argmax(hearer) of sum_i speaker_i * d_ij. The rational
/// overload uses exact ties; the Grammar overload uses argmax_orders.
Rational expected_distance_argmax(const RationalDistribution& speaker,
                                  const RationalDistribution& hearer);
double expected_distance_argmax(const Grammar& speaker, const Grammar& hearer);

Rational expected_distance(HearerModel model, const RationalDistribution& speaker,
                           const RationalDistribution& hearer);

/// Every distribution whose entries are multiples of 1/resolution, in
/// lexicographic order of the numerators.
class SimplexGrid {
 public:
  /// Throws std::invalid_argument for resolution 0.
  explicit SimplexGrid(std::size_t resolution);

  std::size_t resolution() const noexcept { return resolution_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<RationalDistribution>& points() const noexcept { return points_; }

  /// C(resolution + 5, 5)
  static std::uint64_t expected_size(std::size_t resolution);

 private:
  std::size_t resolution_;
  std::vector<RationalDistribution> points_;
};

struct VerificationReport {
  HearerModel model = HearerModel::Sampling;
  std::size_t resolution = 0;
  std::size_t grid_size = 0;
  /// Grid points with expected self-communication distance exactly 0.
  std::vector<RationalDistribution> zero_set;
  /// Smallest strictly positive value and the first grid point attaining it.
  std::optional<Rational> min_nonzero_value;
  std::optional<RationalDistribution> min_nonzero_point;
  /// True iff zero_set is exactly the six vertices and every other point is positive.
  bool pass = false;
};

/// Exhaustive check, over the grid at `resolution`, that speaker = hearer
/// communication has zero expected distance exactly at the one-hot
/// grammars. Throws std::invalid_argument for resolution < 2.
VerificationReport verify_theorem(std::size_t resolution, HearerModel model);

}  // namespace wordorder
