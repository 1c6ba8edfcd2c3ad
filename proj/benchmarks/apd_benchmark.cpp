#include <benchmark/benchmark.h>

#include "cascade/apd.hpp"

namespace {

void BM_McStepGain(benchmark::State& state) {
  const auto trials = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cascade::mc_step_gain(0.5, {trials, 42}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_McStepGain)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_McTotalGainWorkers(benchmark::State& state) {
  const cascade::StaircaseApd apd{{0.5, 0.5, 0.5, 0.5, 0.5}};
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cascade::mc_total_gain(apd, {100'000, 42, workers}));
  }
}
BENCHMARK(BM_McTotalGainWorkers)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
