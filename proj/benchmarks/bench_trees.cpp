#include <benchmark/benchmark.h>

#include "sfc/enumeration.hpp"
#include "sfc/rng.hpp"
#include "sfc/spinecodec.hpp"
#include "sfc/treegen.hpp"

namespace {

using namespace sfc;

Tree random_tree(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (int& c : code) c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  return tree_from_pruefer(code);
}

void BM_RootedCounts(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rooted_counts(N));
}
BENCHMARK(BM_RootedCounts)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_FreeCounts(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(free_counts(N));
}
BENCHMARK(BM_FreeCounts)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_RootedStream(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::size_t total = 0;
  for (auto _ : state) {
    RootedTreeStream s(k);
    std::size_t c = 0;
    while (s.next()) ++c;
    total += c;
    benchmark::DoNotOptimize(c);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(total));
}
BENCHMARK(BM_RootedStream)->DenseRange(10, 16, 2)->Unit(benchmark::kMillisecond);

void BM_FreeGeneration(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t c = 0;
    for_each_free(k, [&](const Tree&) { ++c; });
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_FreeGeneration)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_CanonFree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Tree t = random_tree(n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(canon_free(t));
  state.SetComplexityN(n);
}
BENCHMARK(BM_CanonFree)->RangeMultiplier(4)->Range(16, 16384)->Complexity();

void BM_SpineRoundTrip(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  SpineParams p = compute_params(n, K);
  TreeTuple tuple;
  for (int i = 0; i < p.L; ++i) tuple.blocks.emplace_back(random_tree(K, 100 + static_cast<std::uint64_t>(i)), 0);
  for (auto _ : state) {
    Tree t = encode(p, tuple);
    benchmark::DoNotOptimize(decode(t, K));
  }
}
BENCHMARK(BM_SpineRoundTrip)->Args({4, 500})->Args({6, 5000})->Args({10, 50000})->Unit(benchmark::kMicrosecond);

void BM_CertifySweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(certify_sweep(make_rational(1, 1), 0, n));
}
BENCHMARK(BM_CertifySweep)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace
