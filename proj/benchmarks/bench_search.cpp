#include <benchmark/benchmark.h>

#include "codedomain/search.hpp"

using namespace codedomain;

namespace {

void BM_ExistsFalse(benchmark::State& state) {
  // No (7, 17, 3) binary code exists; the clique search must exhaust.
  for (auto _ : state) benchmark::DoNotOptimize(exists_code(2, 7, 17, 3, SearchBudget{}).verdict);
}

void BM_MaxCode(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto d = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(max_code(2, n, d, SearchBudget{}).code.size());
}

void BM_BestLinear(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(best_min_distance(2, n, 16, SearchBudget{}, SearchMode::Linear).d);
  }
}

void BM_Greedy(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(greedy_code(2, n, 3, SearchBudget{}).code.size());
}

}  // namespace

BENCHMARK(BM_ExistsFalse)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaxCode)->Args({7, 3})->Args({8, 4})->Args({6, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BestLinear)->Arg(7)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Greedy)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
