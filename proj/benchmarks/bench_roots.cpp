#include <benchmark/benchmark.h>

#include "linezero/roots/aberth.hpp"
#include "linezero/roots/line.hpp"
#include "linezero/sheffer/families.hpp"

using namespace linezero;

static void BM_find_roots(benchmark::State& state) {
  const auto h = sheffer::gen_q(unsigned(state.range(0)), -1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(roots::find_roots(h));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_find_roots)->RangeMultiplier(2)->Range(8, 128)->Unit(benchmark::kMillisecond)->Complexity();

// precision sweep at a fixed degree
static void BM_find_roots_bits(benchmark::State& state) {
  const auto h = sheffer::gen_q(40, -1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(roots::find_roots(h, state.range(0)));
}
BENCHMARK(BM_find_roots_bits)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_interlace(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(roots::interlace_check(unsigned(state.range(0)), -1, 0));
}
BENCHMARK(BM_interlace)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
