#include <benchmark/benchmark.h>

#include "linezero/sheffer/families.hpp"

using namespace linezero;

static void BM_gen_q(benchmark::State& state) {
  const auto n = unsigned(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sheffer::gen_q(n, -1, 0));
}
BENCHMARK(BM_gen_q)->RangeMultiplier(2)->Range(8, 256);

static void BM_gen_h_two_factors(benchmark::State& state) {
  const auto n = unsigned(state.range(0));
  const sheffer::ParamSet P({1, series::Rational(3, 2)}, {series::Rational(-1, 2)}, -1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sheffer::gen_h(n, P));
}
BENCHMARK(BM_gen_h_two_factors)->RangeMultiplier(2)->Range(8, 128);

static void BM_q_table(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sheffer::q_table(unsigned(state.range(0)), 0, 1));
}
BENCHMARK(BM_q_table)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
