#include <benchmark/benchmark.h>

#include "wordorder/lexicon.hpp"

using namespace wordorder;

static void BM_Levenshtein(benchmark::State& state) {
  const std::string a = "abcd", b = "abdc";
  for (auto _ : state) benchmark::DoNotOptimize(levenshtein(a, b));
}
BENCHMARK(BM_Levenshtein);

static void BM_NearestWord(benchmark::State& state) {
  RandomStream rng(1);
  const Lexicon lex = generate_lexicon(rng, static_cast<std::size_t>(state.range(0)), 3);
  std::vector<std::string> probes;
  for (int i = 0; i < 256; ++i) {
    std::string w = lex[rng.uniform_index(lex.size())];
    w[rng.uniform_index(3)] = static_cast<char>('a' + rng.uniform_index(26));
    probes.push_back(w);
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(nearest_word(lex, probes[i++ & 255]));
}
BENCHMARK(BM_NearestWord)->Arg(100)->Arg(1000);

static void BM_GenerateLexicon(benchmark::State& state) {
  RandomStream rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(generate_lexicon(rng, 1000, 3));
}
BENCHMARK(BM_GenerateLexicon);
