#include <benchmark/benchmark.h>

#include <cmath>

#include "cesaro/criteria.hpp"
#include "cesaro/operator.hpp"
#include "cesaro/quadrature.hpp"

using namespace cesaro;

static void BM_SeriesMultiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto degree = static_cast<unsigned>(state.range(1));
  const auto f = random_series(n, degree, 40, 1, 0);
  const auto g = random_series(n, degree, 40, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(f, g));
}
BENCHMARK(BM_SeriesMultiply)->Args({1, 8})->Args({2, 8})->Args({3, 8})->Args({3, 16});

static void BM_CoefficientRoute(benchmark::State& state) {
  const auto f = random_series(3, 8, 40, 2, 0);
  const auto g = random_series(3, 8, 40, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(apply_coefficient_route(f, g));
}
BENCHMARK(BM_CoefficientRoute);

static void BM_MonteCarloBallIntegral(benchmark::State& state) {
  const CVector z{Complex{0.3, 0.2}, Complex{-0.1, 0.4}, Complex{0.2, 0.0}};
  const auto spec = BallIntegralSpec::monte_carlo(3, 1.0, static_cast<std::size_t>(state.range(0)), 7, 3);
  const auto F = [&](std::span<const Complex> w) { return std::pow(std::norm(inner(z, w)), 4); };
  for (auto _ : state) benchmark::DoNotOptimize(ball_integral(F, spec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarloBallIntegral)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

static void BM_ProductRuleKernelIntegral(benchmark::State& state) {
  auto spec = BallIntegralSpec::circle_product(0.0, static_cast<unsigned>(state.range(0)), 16);
  const auto z = BallPoint::on_axis(1, 0, 0.99);
  for (auto _ : state) benchmark::DoNotOptimize(lemma4_integral(z, 0.0, spec));
}
BENCHMARK(BM_ProductRuleKernelIntegral)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
