#include <benchmark/benchmark.h>

#include "qconnect/connection.hpp"

namespace qc = qconnect;

static void BM_HermiteConnection(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qc::hermite_connection(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HermiteConnection)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_LaguerreConnection(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qc::laguerre_connection(n, n, {{1, 2}, {2, -1}}));
}
BENCHMARK(BM_LaguerreConnection)->DenseRange(3, 6, 1)->Unit(benchmark::kMillisecond);

static void BM_GegenbauerConnection(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qc::gegenbauer_connection(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GegenbauerConnection)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_SumRule(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qc::gegenbauer_sum_rule(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SumRule)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
