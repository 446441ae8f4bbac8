#include <benchmark/benchmark.h>

#include "codedomain/effective_sets.hpp"

using namespace codedomain;

namespace {

BoundCurve diagonal() {
  return BoundCurve::polyline({make_point(Rational(1), Rational(0)), make_point(Rational(0), Rational(1))});
}

void BM_StripDiagonal(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_strip(core_from_curve(diagonal()), state.range(0), 60000).complete);
}

void BM_StripVg(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_strip(core_from_curve(BoundCurve::vg(2)), state.range(0), 60000).complete);
  }
}

void BM_TwoSidedVg(benchmark::State& state) {
  BoundCurve vg = BoundCurve::vg(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        two_sided_approx(domain_re_from_curve(vg), domain_core_from_curve(vg), state.range(0), 60000).complete);
  }
}

}  // namespace

BENCHMARK(BM_StripDiagonal)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StripVg)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TwoSidedVg)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
