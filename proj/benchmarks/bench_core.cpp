#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "zetalab/divisor.hpp"
#include "zetalab/gram.hpp"
#include "zetalab/nyquist.hpp"
#include "zetalab/special_functions.hpp"
#include "zetalab/summation.hpp"

namespace {

void BM_Z(benchmark::State& state) {
  double t = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zetalab::z(t));
    t += 0.01;
  }
}
BENCHMARK(BM_Z)->Arg(1000)->Arg(100000)->Arg(10000000);

void BM_Theta(benchmark::State& state) {
  double t = 1.0e5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zetalab::theta(t));
    t += 0.01;
  }
}
BENCHMARK(BM_Theta);

void BM_GramPoint(benchmark::State& state) {
  const auto kind = static_cast<zetalab::GramKind>(state.range(0));
  std::int64_t nu = 100000;
  for (auto _ : state) benchmark::DoNotOptimize(zetalab::gram_point(kind, nu++));
}
BENCHMARK(BM_GramPoint)->DenseRange(0, 2);

void BM_Sieve(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    auto t = zetalab::DivisorTable::sieve(1, n);
    benchmark::DoNotOptimize(t.values().data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_Sieve)->Arg(1 << 16)->Arg(1 << 20)->Arg(1 << 23)->Unit(benchmark::kMillisecond);

void BM_ExactSum(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g(0.0, 1e6);
  std::vector<double> xs(static_cast<std::size_t>(state.range(0)));
  for (auto& x : xs) x = g(rng);
  for (auto _ : state) {
    zetalab::ExactSum s;
    for (double x : xs) s.add(x);
    benchmark::DoNotOptimize(s.value());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ExactSum)->Arg(1 << 12)->Arg(1 << 16);

void BM_MomentIntegral(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zetalab::moment_integral(4, 1.0e4, 100.0).value);
}
BENCHMARK(BM_MomentIntegral)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
