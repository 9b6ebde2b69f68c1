#include <benchmark/benchmark.h>

#include "narrow2/redei.hpp"
#include "narrow2/search.hpp"

using namespace narrow2;

static void BM_BuildSpace(benchmark::State& state) {
  SearchOptions options;
  options.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    RedeiCache cache;
    benchmark::DoNotOptimize(build_space(static_cast<std::size_t>(state.range(0)), 3, options, cache));
  }
}
BENCHMARK(BM_BuildSpace)->Args({2, 1})->Args({3, 1})->Args({3, 4})->Unit(benchmark::kMillisecond);

static void BM_ExtendThirdCoordinate(benchmark::State& state) {
  SearchOptions options;
  RedeiCache cache;
  const auto base = build_space(2, 3, options, cache);
  for (auto _ : state) benchmark::DoNotOptimize(extend_space(base, 3, options, cache));
}
BENCHMARK(BM_ExtendThirdCoordinate)->Unit(benchmark::kMillisecond);
