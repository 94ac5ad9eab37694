#include <benchmark/benchmark.h>

#include "zetainv/series.hpp"

using namespace zetainv;

namespace {

PowerSeries sample(int order, const PrecisionContext& ctx) {
  std::vector<BigComplex> c;
  for (int k = 0; k <= order; ++k) c.emplace_back(BigReal(mpq_class(1, k + 1), ctx), BigReal(mpq_class(k % 3, k + 2), ctx));
  return PowerSeries(BigComplex(ctx), c, ctx);
}

void BM_SeriesMul(benchmark::State& state) {
  const PrecisionContext ctx(static_cast<int>(state.range(1)));
  const PowerSeries a = sample(static_cast<int>(state.range(0)), ctx);
  const PowerSeries b = sample(static_cast<int>(state.range(0)), ctx);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMul)->Args({100, 100})->Args({500, 200})->Args({1000, 400})->Unit(benchmark::kMillisecond);

void BM_SeriesLog(benchmark::State& state) {
  const PrecisionContext ctx(static_cast<int>(state.range(1)));
  const PowerSeries a = sample(static_cast<int>(state.range(0)), ctx);
  for (auto _ : state) benchmark::DoNotOptimize(log(a));
}
BENCHMARK(BM_SeriesLog)->Args({100, 100})->Args({500, 200})->Unit(benchmark::kMillisecond);

}  // namespace
