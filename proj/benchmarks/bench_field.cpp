#include <benchmark/benchmark.h>

#include "qconnect/qkernel.hpp"
#include "qconnect/truncated_series.hpp"

namespace qc = qconnect;

static void BM_Canonicalize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const qc::RationalFunction a = qc::q_factorial(n, qc::QBase::q_power(-2));
  const qc::RationalFunction b = qc::q_factorial(n, qc::QBase::q_power(-4)) * qc::RationalFunction::lambda();
  for (auto _ : state) benchmark::DoNotOptimize(a / b + b / a);
}
BENCHMARK(BM_Canonicalize)->Arg(3)->Arg(6)->Arg(9);

static void BM_SeriesExp(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  qc::TruncatedSeries<qc::RationalFunction> a(order);
  for (int k = 1; k <= order; ++k)
    a += qc::TruncatedSeries<qc::RationalFunction>::monomial(order, qc::quesne_c(k, qc::QBase::q()), k);
  for (auto _ : state) benchmark::DoNotOptimize(qc::series_exp(a));
}
BENCHMARK(BM_SeriesExp)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_QuesneProductForm(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const auto t = qc::TruncatedSeries<qc::RationalFunction>::monomial(order, qc::RationalFunction(1), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(qc::q_exp_product_form(qc::QExpKind::big_E, t, qc::QBase::q_power(-2)));
}
BENCHMARK(BM_QuesneProductForm)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
