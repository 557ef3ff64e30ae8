#include "wordorder/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

namespace wordorder {
namespace {

// Seed-path tags; the scenario is part of every path so that the four
// scenarios of a suite never share a stream.
enum StreamTag : std::uint64_t { kLexiconStream = 1, kTrialStream = 2, kSelectionStream = 3 };

std::uint64_t scenario_key(Scenario s) { return static_cast<std::uint64_t>(s); }

void evaluate_range(std::span<const Grammar> grammars, const EvolutionParams& params,
                    const LexiconSet& lexicons, std::size_t generation, std::size_t begin,
                    std::size_t end, std::vector<double>& out) {
  for (std::size_t i = begin; i < end; ++i) {
    double total = 0.0;
    for (std::size_t t = 0; t < params.trials_per_grammar; ++t) {
      auto rng = RandomStream::derive(params.master_seed,
                                      {scenario_key(params.scenario), kTrialStream, generation, i, t});
      total += communication_trial(grammars[i], lexicons, params.scenario, params.noise, rng).value();
    }
    out[i] = total / static_cast<double>(params.trials_per_grammar);
  }
}

}  // namespace

void EvolutionParams::validate() const {
  if (population_size < 2) throw ConfigError("population", "must be at least 2");
  if (!(selection_rate > 0.0 && selection_rate <= 1.0)) {
    throw ConfigError("selection-rate", "must lie in (0, 1]");
  }
  if (!(mutation_variance > 0.0) || !std::isfinite(mutation_variance)) {
    throw ConfigError("mutation-variance", "must be positive");
  }
  if (trials_per_grammar < 1) throw ConfigError("trials", "must be at least 1");
  if (!(noise.flip_probability >= 0.0 && noise.flip_probability <= 1.0)) {
    throw ConfigError("noise", "must lie in [0, 1]");
  }
  if (lexicon.word_length < 1) throw ConfigError("word-length", "must be at least 1");
  if (uses_split_lexicons(scenario)) {
    if (lexicon.nouns < 2) throw ConfigError("noun-lexicon-size", "must be at least 2");
    if (lexicon.verbs < 1) throw ConfigError("verb-lexicon-size", "must be at least 1");
  } else if (lexicon.unified < 3) {
    throw ConfigError("lexicon-size", "must be at least 3");
  }
  const double space = std::pow(static_cast<double>(kAlphabet.size()),
                                 static_cast<double>(lexicon.word_length));
  const double needed = uses_split_lexicons(scenario)
                            ? static_cast<double>(lexicon.nouns + lexicon.verbs)
                            : static_cast<double>(lexicon.unified);
  if (needed > space) throw ConfigError("word-length", "too short for the requested lexicon size");
  if (threads < 1) throw ConfigError("threads", "must be at least 1");
}

std::size_t EvolutionParams::survivor_count() const {
  const auto n = static_cast<double>(population_size);
  // Guard against 0.3 * 100 = 30.000000000000004 rounding up to 31.
  auto s = static_cast<std::size_t>(std::ceil(selection_rate * n - 1e-9));
  return std::clamp<std::size_t>(s, 1, population_size);
}

LexiconSet make_lexicons(const EvolutionParams& params) {
  auto rng = RandomStream::derive(params.master_seed, {scenario_key(params.scenario), kLexiconStream});
  const auto& sizes = params.lexicon;
  if (!uses_split_lexicons(params.scenario)) {
    return LexiconSet::unified(
        generate_lexicon(rng, sizes.unified, sizes.word_length, LexiconKind::Unified));
  }
  Lexicon nouns = generate_lexicon(rng, sizes.nouns, sizes.word_length, LexiconKind::Noun);
  Lexicon verbs =
      generate_lexicon(rng, sizes.verbs, sizes.word_length, LexiconKind::Verb, nouns.words());
  return LexiconSet::split(std::move(nouns), std::move(verbs));
}

std::vector<double> evaluate_population(std::span<const Grammar> grammars,
                                        const EvolutionParams& params, const LexiconSet& lexicons,
                                        std::size_t generation) {
  std::vector<double> fitness(grammars.size(), 0.0);
  const std::size_t workers = std::min(params.threads, std::max<std::size_t>(grammars.size(), 1));
  if (workers <= 1) {
    evaluate_range(grammars, params, lexicons, generation, 0, grammars.size(), fitness);
    return fitness;
  }
  // Disjoint index ranges; each grammar writes only its own slot.
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (grammars.size() + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(grammars.size(), begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] {
      evaluate_range(grammars, params, lexicons, generation, begin, end, fitness);
    });
  }
  pool.clear();
  return fitness;
}

std::vector<Grammar> select_and_reproduce(std::span<const Grammar> grammars,
                                          std::span<const double> fitnesses,
                                          const EvolutionParams& params, RandomStream& rng) {
  if (grammars.size() != fitnesses.size()) {
    throw std::invalid_argument("grammar and fitness lists differ in length");
  }
  if (grammars.size() != params.population_size) {
    throw std::invalid_argument("population does not match population_size");
  }
  std::vector<std::size_t> ranking(grammars.size());
  std::iota(ranking.begin(), ranking.end(), 0);
  std::stable_sort(ranking.begin(), ranking.end(),
                   [&](std::size_t a, std::size_t b) { return fitnesses[a] < fitnesses[b]; });

  const std::size_t survivors = params.survivor_count();
  std::vector<Grammar> next;
  next.reserve(params.population_size);
  for (std::size_t child = 0; child < params.population_size; ++child) {
    const Grammar& parent = grammars[ranking[child % survivors]];
    if (params.elitism && child < survivors) {
      next.push_back(parent);
    } else {
      next.push_back(mutate(parent, rng, params.mutation_variance));
    }
  }
  return next;
}

GenerationStats summarize(std::size_t generation, std::span<const Grammar> grammars,
                          std::span<const double> fitnesses) {
  if (grammars.empty() || grammars.size() != fitnesses.size()) {
    throw std::invalid_argument("summarize needs matching, nonempty grammar and fitness lists");
  }
  GenerationStats stats;
  stats.generation = generation;
  std::size_t best = 0;
  double distance_sum = 0.0;
  double entropy_sum = 0.0;
  for (std::size_t i = 0; i < grammars.size(); ++i) {
    distance_sum += fitnesses[i];
    entropy_sum += entropy(grammars[i]);
    if (fitnesses[i] < fitnesses[best]) best = i;
  }
  const auto n = static_cast<double>(grammars.size());
  stats.avg_distance = distance_sum / n;
  stats.avg_entropy = entropy_sum / n;
  stats.best_distance = fitnesses[best];
  stats.best_grammar = grammars[best];
  stats.best_entropy = entropy(grammars[best]);
  return stats;
}

std::vector<GenerationStats> run_experiment(const EvolutionParams& params,
                                            const PopulationObserver& observer) {
  params.validate();
  const LexiconSet lexicons = make_lexicons(params);

  std::vector<Grammar> population(params.population_size, Grammar::uniform());
  std::vector<GenerationStats> history;
  history.reserve(params.generations + 1);
  for (std::size_t g = 0;; ++g) {
    if (observer) observer(g, population);
    const auto fitness = evaluate_population(population, params, lexicons, g);
    history.push_back(summarize(g, population, fitness));
    if (g == params.generations) break;
    auto rng = RandomStream::derive(params.master_seed,
                                    {scenario_key(params.scenario), kSelectionStream, g});
    population = select_and_reproduce(population, fitness, params, rng);
  }
  return history;
}

}  // namespace wordorder
