#include <benchmark/benchmark.h>

#include <random>

#include "shockcast/arima.hpp"
#include "shockcast/fixture.hpp"
#include "shockcast/search.hpp"
#include "shockcast/shock.hpp"

using namespace shockcast;

namespace {

QuarterlySeries ar_series(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<double> v(n);
  double x = 0.0;
  for (auto& y : v) {
    x = 0.6 * x + normal(rng);
    y = x;
  }
  return {Quarter(1970, 1), v};
}

QuarterlySeries drifting_walk(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0136, 0.01);
  std::vector<double> v(n);
  double x = 20.0;
  for (auto& y : v) {
    y = x;
    x += normal(rng);
  }
  return {Quarter(2010, 1), v};
}

void BM_LogLikelihood(benchmark::State& state) {
  const auto s = ar_series(static_cast<std::size_t>(state.range(0)), 1);
  ArimaOrder o;
  o.p = 2;
  o.q = 2;
  o.Q = 1;
  ArimaParams p;
  p.ar = {0.5, -0.2};
  p.ma = {0.3, 0.1};
  p.sma = {0.4};
  for (auto _ : state) benchmark::DoNotOptimize(log_likelihood(o, p, s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LogLikelihood)->Arg(40)->Arg(200)->Arg(1000)->Complexity();

void BM_FitArma11(benchmark::State& state) {
  const auto s = ar_series(static_cast<std::size_t>(state.range(0)), 2);
  ArimaOrder o;
  o.p = 1;
  o.q = 1;
  for (auto _ : state) benchmark::DoNotOptimize(fit(o, s));
}
BENCHMARK(BM_FitArma11)->Arg(40)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_StepwiseSearchSectorSized(benchmark::State& state) {
  const auto s = drifting_walk(40, 3);
  for (auto _ : state) benchmark::DoNotOptimize(stepwise_search(s));
}
BENCHMARK(BM_StepwiseSearchSectorSized)->Unit(benchmark::kMillisecond);

void BM_AnalyzeFixture(benchmark::State& state) {
  const auto panel = load_fixture().impact_panel();
  for (auto _ : state) benchmark::DoNotOptimize(analyze(panel));
}
BENCHMARK(BM_AnalyzeFixture);

}  // namespace
BENCHMARK_MAIN();
