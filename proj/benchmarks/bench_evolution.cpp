#include <benchmark/benchmark.h>

#include "wordorder/evolution.hpp"

using namespace wordorder;

static void BM_CommunicationTrial(benchmark::State& state) {
  EvolutionParams p;
  p.scenario = kScenarios[static_cast<std::size_t>(state.range(0))];
  const auto lex = make_lexicons(p);
  RandomStream rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(communication_trial(uniform_grammar(), lex, p.scenario, p.noise, rng));
}
BENCHMARK(BM_CommunicationTrial)->DenseRange(0, 3);

static void BM_Generation(benchmark::State& state) {
  EvolutionParams p;
  p.threads = static_cast<std::size_t>(state.range(0));
  const auto lex = make_lexicons(p);
  std::vector<Grammar> pop(p.population_size, uniform_grammar());
  RandomStream rng(4);
  std::size_t g = 0;
  for (auto _ : state) {
    const auto fit = evaluate_population(pop, p, lex, g++);
    pop = select_and_reproduce(pop, fit, p, rng);
  }
}
BENCHMARK(BM_Generation)->Arg(1)->Arg(4);
