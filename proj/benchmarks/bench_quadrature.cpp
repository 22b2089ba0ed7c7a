#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "linezero/asymptotics/pn.hpp"
#include "linezero/special/mellin.hpp"
#include "linezero/special/quadrature.hpp"

using namespace linezero;
using std::numbers::pi;

static void BM_tanh_sinh_log(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(special::integrate_tanh_sinh([](double x) { return special::cplx(std::log(x), 0); }, 0, 1));
}
BENCHMARK(BM_tanh_sinh_log);

static void BM_mellin_gaussian(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(special::mellin_quad([](double x) { return std::exp(-pi * x * x); }, 2.5));
}
BENCHMARK(BM_mellin_gaussian);

static void BM_p_n_contour(benchmark::State& state) {
  const auto fp = asymptotics::FloatParams::basic(-1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(asymptotics::p_n_contour(unsigned(state.range(0)), 0.5, fp));
}
BENCHMARK(BM_p_n_contour)->Arg(100)->Arg(800)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
