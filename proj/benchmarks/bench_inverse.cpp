#include <benchmark/benchmark.h>

#include <filesystem>

#include "zetainv/invzeta.hpp"

using namespace zetainv;

namespace {

void BM_IzetaLimit(benchmark::State& state) {
  const PrecisionContext ctx(100);
  const BigComplex w(BigReal(mpq_class(3, 2), ctx), BigReal(1, ctx));
  for (auto _ : state) benchmark::DoNotOptimize(izeta_limit(w, static_cast<int>(state.range(0)), SignRule::automatic, ctx));
}
BENCHMARK(BM_IzetaLimit)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_IzetaProduct(benchmark::State& state) {
  const AttractorTable t = AttractorTable::load(std::filesystem::path(ZETAINV_DATA_DIR) / "jx_singularities_m50.txt");
  const BigComplex w(BigReal(mpq_class(3, 2), t.ctx), BigReal(1, t.ctx));
  for (auto _ : state) benchmark::DoNotOptimize(izeta_product(w, t));
}
BENCHMARK(BM_IzetaProduct)->Unit(benchmark::kMillisecond);

void BM_Attractor(benchmark::State& state) {
  const PrecisionContext ctx(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(attractor(static_cast<int>(state.range(0)), ctx));
}
BENCHMARK(BM_Attractor)->Args({10, 60})->Args({50, 200})->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace
