#include <benchmark/benchmark.h>

#include <random>
#include <set>

#include "codedomain/code.hpp"

using namespace codedomain;

namespace {

Code random_code(unsigned q, unsigned n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<std::vector<Symbol>> words;
  while (words.size() < m) {
    std::vector<Symbol> w(n);
    for (auto& s : w) s = static_cast<Symbol>(rng() % q);
    words.insert(w);
  }
  return Code::from_rows(q, {words.begin(), words.end()});
}

// Binary codes take the bit-packed kernel, other alphabets the symbol loop.
void BM_MinDistance(benchmark::State& state) {
  const auto q = static_cast<unsigned>(state.range(0));
  const auto n = static_cast<unsigned>(state.range(1));
  const auto m = static_cast<std::size_t>(state.range(2));
  Code c = random_code(q, n, m, 1);
  for (auto _ : state) benchmark::DoNotOptimize(min_distance(c).d);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m * (m - 1) / 2));
}

}  // namespace

BENCHMARK(BM_MinDistance)->Args({2, 64, 256})->Args({2, 256, 256})->Args({2, 64, 1024})->Args({3, 64, 256})->Args({4, 32, 512});
