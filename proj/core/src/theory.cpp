#include "wordorder/theory.hpp"

#include <algorithm>
#include <stdexcept>

namespace wordorder {

namespace {
// Boost 1.74 recurses on mixed int/rational comparisons under C++20
// rewritten operators, so compare against rational constants only.
const Rational kZero(0);
const Rational kOne(1);
}  // namespace

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string_view to_string(HearerModel model) noexcept {
  switch (model) {
    case HearerModel::Sampling: return "sampling";
    case HearerModel::Argmax: return "argmax";
  }
  return "unknown";
}

void require_distribution(const RationalDistribution& p) {
  Rational sum;
  for (const auto& x : p) {
    if (x < kZero) throw std::invalid_argument("distribution has a negative entry");
    sum += x;
  }
  if (sum != kOne) throw std::invalid_argument("distribution does not sum to 1");
}

bool is_vertex(const RationalDistribution& p) {
  return std::count(p.begin(), p.end(), kOne) == 1 &&
         std::count(p.begin(), p.end(), kZero) == static_cast<std::ptrdiff_t>(kOrderCount - 1);
}

Rational expected_distance_sampling(const RationalDistribution& speaker,
                                    const RationalDistribution& hearer) {
  const auto& d = distance_matrix();
  Rational total;
  for (std::size_t i = 0; i < kOrderCount; ++i) {
    if (speaker[i] == kZero) continue;
    for (std::size_t j = 0; j < kOrderCount; ++j) {
      if (hearer[j] == kZero) continue;
      total += speaker[i] * to_rational(d(i, j)) * hearer[j];
    }
  }
  return total;
}

double expected_distance_sampling(const Grammar& speaker, const Grammar& hearer) {
  const auto& d = distance_matrix();
  double total = 0.0;
  for (std::size_t i = 0; i < kOrderCount; ++i) {
    for (std::size_t j = 0; j < kOrderCount; ++j) total += speaker[i] * d(i, j).value() * hearer[j];
  }
  return total;
}

namespace {

template <typename Scalar, typename Convert>
Scalar mean_distance_to(const std::array<Scalar, kOrderCount>& speaker, OrderSet targets,
                        Convert convert) {
  const auto& d = distance_matrix();
  Scalar total{};
  for (auto j : targets.members()) {
    for (std::size_t i = 0; i < kOrderCount; ++i) total += speaker[i] * convert(d(i, j.index()));
  }
  return total / static_cast<Scalar>(static_cast<std::int64_t>(targets.size()));
}

}  // namespace

Rational expected_distance_argmax(const RationalDistribution& speaker,
                                  const RationalDistribution& hearer) {
  const Rational best = *std::max_element(hearer.begin(), hearer.end());
  OrderSet ties;
  for (auto order : all_orders()) {
    if (hearer[order.index()] == best) ties.insert(order);
  }
  return mean_distance_to(speaker, ties, [](RoleDistance x) { return to_rational(x); });
}

double expected_distance_argmax(const Grammar& speaker, const Grammar& hearer) {
  return mean_distance_to(speaker.probabilities(), argmax_orders(hearer),
                          [](RoleDistance x) { return x.value(); });
}

Rational expected_distance(HearerModel model, const RationalDistribution& speaker,
                           const RationalDistribution& hearer) {
  return model == HearerModel::Sampling ? expected_distance_sampling(speaker, hearer)
                                        : expected_distance_argmax(speaker, hearer);
}

SimplexGrid::SimplexGrid(std::size_t resolution) : resolution_(resolution) {
  if (resolution == 0) throw std::invalid_argument("simplex grid resolution must be positive");
  points_.reserve(static_cast<std::size_t>(expected_size(resolution)));
  const auto k = static_cast<std::int64_t>(resolution);
  std::array<std::int64_t, kOrderCount> counts{};
  // Compositions of k into six nonnegative parts, lexicographic.
  auto recurse = [&](auto& self, std::size_t slot, std::int64_t remaining) -> void {
    if (slot + 1 == kOrderCount) {
      counts[slot] = remaining;
      RationalDistribution p;
      for (std::size_t i = 0; i < kOrderCount; ++i) p[i] = Rational(counts[i], k);
      points_.push_back(p);
      return;
    }
    for (std::int64_t c = 0; c <= remaining; ++c) {
      counts[slot] = c;
      self(self, slot + 1, remaining - c);
    }
  };
  recurse(recurse, 0, k);
}

std::uint64_t SimplexGrid::expected_size(std::size_t resolution) {
  // C(k+5, 5), built incrementally so every intermediate is an integer.
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= kOrderCount - 1; ++i) c = c * (resolution + i) / i;
  return c;
}

VerificationReport verify_theorem(std::size_t resolution, HearerModel model) {
  if (resolution < 2) {
    throw std::invalid_argument("verification resolution must be at least 2");
  }
  const SimplexGrid grid(resolution);
  VerificationReport report;
  report.model = model;
  report.resolution = resolution;
  report.grid_size = grid.size();

  bool positive_off_vertices = true;
  for (const auto& p : grid.points()) {
    const Rational value = expected_distance(model, p, p);
    if (value == kZero) {
      report.zero_set.push_back(p);
      if (!is_vertex(p)) positive_off_vertices = false;
    } else if (value < kZero) {
      positive_off_vertices = false;
    } else if (!report.min_nonzero_value || value < *report.min_nonzero_value) {
      report.min_nonzero_value = value;
      report.min_nonzero_point = p;
    }
  }
  const bool all_vertices_zero =
      std::count_if(report.zero_set.begin(), report.zero_set.end(),
                    [](const RationalDistribution& p) { return is_vertex(p); }) ==
      static_cast<std::ptrdiff_t>(kOrderCount);
  report.pass = positive_off_vertices && all_vertices_zero && report.zero_set.size() == kOrderCount;
  return report;
}

}  // namespace wordorder
