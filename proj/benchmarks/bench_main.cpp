#include <benchmark/benchmark.h>

#include "sqw/degenerations.hpp"
#include "sqw/grid.hpp"
#include "sqw/random.hpp"
#include "sqw/sqwhittaker.hpp"
#include "sqw/weights.hpp"

using namespace sqw;

namespace {

const DrawOptions kWide{.max_num = 60, .max_den = 40};

void BM_FSkewSymbolic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  const ParamDraw d = draw_params(rng, 12, kWide);
  const Partition lambda{3, 2};
  for (auto _ : state) benchmark::DoNotOptimize(f_skew_symbolic(lambda, Partition{}, n, d.A, d.B, d.q));
}
BENCHMARK(BM_FSkewSymbolic)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_FSkewNumeric(benchmark::State& state) {
  Rng rng(2);
  const ParamDraw d = draw_params(rng, 12, kWide);
  const std::vector<Rational> x = draw_point(rng, 3);
  const Partition lambda{4, 2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(f_skew(lambda, Partition{}, x, d.A, d.B, d.q));
}
BENCHMARK(BM_FSkewNumeric)->Unit(benchmark::kMicrosecond);

void BM_SolveF(benchmark::State& state) {
  const int w = static_cast<int>(state.range(0));
  Rng rng(3);
  const Grid g = draw_q_grid(rng, 3, w + 1, kWide);
  const Partition lambda{w};
  for (auto _ : state) benchmark::DoNotOptimize(solve_f(g, lambda));
}
BENCHMARK(BM_SolveF)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_Cauchy(benchmark::State& state) {
  const int D = static_cast<int>(state.range(0));
  Rng rng(4);
  const GradedPoint p = draw_graded_point(rng, 16, 2, 2, kWide).point;
  for (auto _ : state) benchmark::DoNotOptimize(check_cauchy(2, 2, D, p));
}
BENCHMARK(BM_Cauchy)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_YbeMixed(benchmark::State& state) {
  Rng rng(5);
  const YbeParams p = draw_ybe_params(rng).params;
  const YbeBoundary bd{Composition{1}, Composition{2}, Composition{0}, Composition{1}, Composition{1}, Composition{1}};
  for (auto _ : state) benchmark::DoNotOptimize(check_ybe_mixed(p, bd));
}
BENCHMARK(BM_YbeMixed)->Unit(benchmark::kMicrosecond);

void BM_Classify(benchmark::State& state) {
  Rng rng(6);
  const Grid g = draw_linear_grid(rng, 3, 4, kWide);
  for (auto _ : state) benchmark::DoNotOptimize(classify_grid(g));
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
