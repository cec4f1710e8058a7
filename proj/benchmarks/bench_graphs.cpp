#include <benchmark/benchmark.h>

#include "sfc/census.hpp"
#include "sfc/graph.hpp"
#include "sfc/sampler.hpp"
#include "sfc/spectral.hpp"

namespace {

using namespace sfc;

void BM_Kirchhoff(benchmark::State& state) {
  Graph g = random_regular(static_cast<int>(state.range(0)), 4, 1).graph;
  for (auto _ : state) benchmark::DoNotOptimize(kirchhoff_count(g));
}
BENCHMARK(BM_Kirchhoff)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Spectrum(benchmark::State& state) {
  Graph g = random_regular(static_cast<int>(state.range(0)), 4, 2).graph;
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(g));
}
BENCHMARK(BM_Spectrum)->Arg(25)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_EnumerateSpanningTrees(benchmark::State& state) {
  Graph g = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::uint64_t c = 0;
    enumerate_spanning_trees(g, kDefaultTreeCap, [&](const Tree&) { ++c; });
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_EnumerateSpanningTrees)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  Graph g = random_regular(12, 4, 12).graph;
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(unlabelled_census(g, kDefaultTreeCap, std::nullopt, threads));
}
BENCHMARK(BM_Census)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Wilson(benchmark::State& state) {
  Graph g = random_regular(static_cast<int>(state.range(0)), 3, 3).graph;
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(wilson_sample(g, ++seed));
}
BENCHMARK(BM_Wilson)->Arg(100)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

void BM_RandomRegular(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(random_regular(100, d, ++seed));
}
BENCHMARK(BM_RandomRegular)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
