#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordorder/agents.hpp"
#include "wordorder/channel.hpp"
#include "wordorder/grammar.hpp"
#include "wordorder/random.hpp"

namespace wordorder {

/// Raised for an invalid parameter; key() names the offending setting
/// using its command-line spelling (e.g. "selection-rate").
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::invalid_argument(key + ": " + message), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

struct LexiconSizes {
  std::size_t unified = 1000;
  std::size_t nouns = 500;
  std::size_t verbs = 500;
  std::size_t word_length = kDefaultWordLength;
};

struct EvolutionParams {
  std::size_t population_size = 100;
  std::size_t generations = 1000;
  double selection_rate = 0.3;
  double mutation_variance = kDefaultMutationVariance;
  std::size_t trials_per_grammar = 1;
  NoiseParams noise{};
  Scenario scenario = Scenario::Base;
  std::uint64_t master_seed = 0;
  LexiconSizes lexicon{};
  /// Carry survivors into the next generation unmutated.
  bool elitism = false;
  /// Worker threads for population evaluation; results do not depend on it.
  std::size_t threads = 1;

  /// Throws ConfigError.
  void validate() const;

  std::size_t survivor_count() const;
};

struct GenerationStats {
  std::size_t generation = 0;
  double avg_distance = 0.0;
  double avg_entropy = 0.0;
  double best_distance = 0.0;
  Grammar best_grammar = Grammar::uniform();
  double best_entropy = 0.0;

  friend bool operator==(const GenerationStats&, const GenerationStats&) = default;
};

/// Lexicons for params.scenario, drawn from a stream derived from the
/// master seed and the scenario.
LexiconSet make_lexicons(const EvolutionParams& params);

/// Fitness (mean role distance, lower is better) of each grammar. Trial t of
/// grammar i in generation g uses a stream derived from
/// (master_seed, scenario, g, i, t), so the result is independent of
/// params.threads.
std::vector<double> evaluate_population(std::span<const Grammar> grammars,
                                        const EvolutionParams& params, const LexiconSet& lexicons,
                                        std::size_t generation);

/// Truncation selection followed by round-robin mutated cloning: survivors
/// are the ceil(rate * N) fittest (ties by lower index), and child c
/// descends from survivor c mod S.
std::vector<Grammar> select_and_reproduce(std::span<const Grammar> grammars,
                                          std::span<const double> fitnesses,
                                          const EvolutionParams& params, RandomStream& rng);

GenerationStats summarize(std::size_t generation, std::span<const Grammar> grammars,
                          std::span<const double> fitnesses);

using PopulationObserver = std::function<void(std::size_t generation, std::span<const Grammar>)>;

/// Runs generations 0..params.generations and returns one stats row per
/// generation (generations + 1 rows). Deterministic given the params.
std::vector<GenerationStats> run_experiment(const EvolutionParams& params,
                                            const PopulationObserver& observer = {});

}  // namespace wordorder
