#include <benchmark/benchmark.h>

#include "wordorder/theory.hpp"

using namespace wordorder;

static void BM_VerifyTheorem(benchmark::State& state) {
  const auto model = state.range(1) ? HearerModel::Argmax : HearerModel::Sampling;
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(static_cast<std::size_t>(state.range(0)), model));
}
BENCHMARK(BM_VerifyTheorem)->Args({10, 0})->Args({10, 1})->Args({20, 0});
