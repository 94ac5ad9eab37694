#include <benchmark/benchmark.h>

#include "zetainv/logderiv.hpp"
#include "zetainv/specfun.hpp"

using namespace zetainv;

namespace {

void BM_ZetaSeries(benchmark::State& state) {
  const PrecisionContext ctx(static_cast<int>(state.range(1)));
  const BigComplex c(BigReal(mpq_class(1, 2), ctx));
  for (auto _ : state) benchmark::DoNotOptimize(zeta_series(c, static_cast<int>(state.range(0)), ctx));
}
BENCHMARK(BM_ZetaSeries)->Args({40, 100})->Args({200, 200})->Args({500, 400})->Unit(benchmark::kMillisecond);

void BM_XiCriticalJet(benchmark::State& state) {
  const PrecisionContext ctx(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(big_xi_critical_series(static_cast<int>(state.range(0)), ctx));
}
BENCHMARK(BM_XiCriticalJet)->Args({100, 200})->Args({500, 1000})->Unit(benchmark::kMillisecond);

void BM_ZntClosedForm(benchmark::State& state) {
  const PrecisionContext ctx(200);
  for (auto _ : state) benchmark::DoNotOptimize(z_nt_closed_form(static_cast<int>(state.range(0)), ctx));
}
BENCHMARK(BM_ZntClosedForm)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
