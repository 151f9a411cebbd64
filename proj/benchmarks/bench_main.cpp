#include <benchmark/benchmark.h>

#include "alif/counterexample.hpp"
#include "alif/decomposition.hpp"
#include "alif/random.hpp"
#include "alif/spectral.hpp"
#include "alif/symbol.hpp"

namespace {

using namespace alif;

void BM_BuildK(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = make_triangular_filter();
  const auto l = make_continuous_length([](double x) { return 4.0 + 12.0 * x; });
  for (auto _ : state) benchmark::DoNotOptimize(build_K(f, l, n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildK)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_Eigenvalues(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto k = build_K(make_triangular_filter(), make_constant_length(8.0), n);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(k.entries()));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Eigenvalues)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond)->Complexity();

void BM_SymbolRange(benchmark::State& state) {
  const auto b = build_counterexample();
  const Symbol sym(b.filter_raw, b.length);
  for (auto _ : state) benchmark::DoNotOptimize(symbol_range(sym, 301, 2001));
}
BENCHMARK(BM_SymbolRange)->Unit(benchmark::kMillisecond);

void BM_Sift(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto k = build_K(make_triangular_filter(), make_constant_length(16.0), n);
  const Signal s(seeded_signal(n, kDefaultSeed));
  SiftingConfig cfg;
  cfg.max_inner = 100;
  cfg.delta = 1e-12;
  for (auto _ : state) benchmark::DoNotOptimize(sift(s, k, cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.max_inner));
}
BENCHMARK(BM_Sift)->RangeMultiplier(4)->Range(256, 16384);

void BM_Decompose(benchmark::State& state) {
  const Signal s(seeded_signal(1024, kDefaultSeed));
  const auto f = make_triangular_filter();
  for (auto _ : state) benchmark::DoNotOptimize(decompose(s, f, extrema_length_strategy()));
}
BENCHMARK(BM_Decompose)->Unit(benchmark::kMillisecond);

void BM_VerifyCounterexample(benchmark::State& state) {
  const auto b = build_counterexample();
  for (auto _ : state) benchmark::DoNotOptimize(verify_counterexample(b));
}
BENCHMARK(BM_VerifyCounterexample)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
