#include <benchmark/benchmark.h>

#include "codedomain/bounds.hpp"
#include "codedomain/log_enclosure.hpp"

using namespace codedomain;

namespace {

void BM_LnEnclosure(benchmark::State& state) {
  const long bits = state.range(0);
  const Rational x = make_rational(3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(ln_enclosure(x, bits));
}

void BM_VgCurve(benchmark::State& state) {
  const long bits = state.range(0);
  const Rational x = make_rational(1, 4);
  for (auto _ : state) benchmark::DoNotOptimize(vg_curve(2, x, bits));
}

void BM_VgRoot(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(vg_root(2, make_rational(1, 8), state.range(0)));
}

}  // namespace

BENCHMARK(BM_LnEnclosure)->Arg(32)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_VgCurve)->Arg(32)->Arg(64)->Arg(256);
BENCHMARK(BM_VgRoot)->Arg(20)->Arg(40);
