#include <benchmark/benchmark.h>

#include "cascade/engine.hpp"

namespace {

cascade::CascadeNetwork chain(std::size_t n) {
  return {100.0, 1.0, std::vector<cascade::StageSpec>(n, cascade::StageSpec{1.5, 0.2, 0.3})};
}

void BM_BuildReport(benchmark::State& state) {
  const auto net = chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cascade::build_report(net));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildReport)->RangeMultiplier(4)->Range(4, 4096)->Complexity();

void BM_ProductComposition(benchmark::State& state) {
  const auto net = chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cascade::total_product_composition(net));
  }
}
BENCHMARK(BM_ProductComposition)->Arg(12)->Arg(1000);

void BM_BaseCorrected(benchmark::State& state) {
  const auto net = chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cascade::total_base_corrected(net));
  }
}
BENCHMARK(BM_BaseCorrected)->Arg(12)->Arg(1000);

}  // namespace
