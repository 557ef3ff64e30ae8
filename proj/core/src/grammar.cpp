#include "wordorder/grammar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace wordorder {

bool is_valid_distribution(const Probabilities& p) noexcept {
  double sum = 0.0;
  for (double x : p) {
    if (!std::isfinite(x) || x < 0.0) return false;
    sum += x;
  }
  return std::abs(sum - 1.0) <= kSimplexTolerance;
}

Grammar::Grammar(const Probabilities& p) : p_(p) {
  if (!is_valid_distribution(p)) {
    throw std::invalid_argument("grammar is not a probability distribution over six orders");
  }
}

Grammar Grammar::uniform() noexcept {
  Probabilities p;
  p.fill(1.0 / static_cast<double>(kOrderCount));
  return Grammar(p, Unchecked{});
}

Grammar Grammar::one_hot(WordOrder order) noexcept {
  Probabilities p{};
  p[order.index()] = 1.0;
  return Grammar(p, Unchecked{});
}

double Grammar::max_probability() const noexcept { return *std::max_element(p_.begin(), p_.end()); }

Grammar uniform_grammar() noexcept { return Grammar::uniform(); }

double entropy(const Grammar& g) noexcept {
  static const double log_base = std::log(static_cast<double>(kOrderCount));
  double h = 0.0;
  for (double p : g.probabilities()) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return std::clamp(h / log_base, 0.0, 1.0);
}

WordOrder sample_order(const Grammar& g, RandomStream& rng) {
  const double u = rng.uniform();
  const auto& p = g.probabilities();
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < kOrderCount; ++i) {
    if (p[i] <= 0.0) continue;
    last_positive = i;
    cumulative += p[i];
    if (u < cumulative) return WordOrder::from_index(i);
  }
  // Rounding can leave the cumulative sum a hair under 1.
  return WordOrder::from_index(last_positive);
}

OrderSet argmax_orders(const Grammar& g, OrderSet candidates) noexcept {
  double best = -1.0;
  for (auto order : all_orders()) {
    if (candidates.contains(order)) best = std::max(best, g[order]);
  }
  OrderSet out;
  for (auto order : all_orders()) {
    if (candidates.contains(order) && g[order] >= best - kArgmaxTolerance) out.insert(order);
  }
  return out;
}

Grammar mutate(const Grammar& g, RandomStream& rng, double variance) {
  if (!(variance > 0.0)) throw std::invalid_argument("mutation variance must be positive");
  const double stddev = std::sqrt(variance);
  Probabilities p = g.probabilities();
  for (double& x : p) x = std::max(0.0, x + rng.normal(0.0, stddev));
  const double sum = std::accumulate(p.begin(), p.end(), 0.0);
  if (!(sum > 0.0)) return Grammar::uniform();
  for (double& x : p) x /= sum;
  return Grammar(p);
}

}  // namespace wordorder
