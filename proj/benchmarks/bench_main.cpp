#include <benchmark/benchmark.h>

#include "coxlab/coxlab.hpp"

namespace {

using namespace coxlab;

GroupSpec spec_for(std::int64_t code, std::int64_t n) {
  return GroupSpec(static_cast<Family>(code), static_cast<int>(n));
}

void BM_BfsByLength(benchmark::State& state) {
  const GroupSpec spec = spec_for(state.range(0), state.range(1));
  const int L = static_cast<int>(state.range(2));
  std::size_t total = 0;
  for (auto _ : state) {
    const LengthCensus c = bfs_by_length(spec, L);
    total = c.total();
    benchmark::DoNotOptimize(total);
  }
  state.counters["elements"] = static_cast<double>(total);
}
BENCHMARK(BM_BfsByLength)
    ->Args({static_cast<int>(Family::A), 6, 15})
    ->Args({static_cast<int>(Family::B), 4, 16})
    ->Args({static_cast<int>(Family::AffineA), 3, 12})
    ->Args({static_cast<int>(Family::AffineC), 2, 12})
    ->Unit(benchmark::kMillisecond);

void BM_MainTheorem(benchmark::State& state) {
  const GroupSpec spec = spec_for(state.range(0), state.range(1));
  const int L = static_cast<int>(state.range(2));
  const LengthCensus census = bfs_by_length(spec, L);
  for (auto _ : state) {
    const TheoremReport r = verify_main_theorem(census);
    benchmark::DoNotOptimize(r.disagreements.size());
  }
  state.counters["elements"] = static_cast<double>(census.total());
}
BENCHMARK(BM_MainTheorem)
    ->Args({static_cast<int>(Family::A), 5, 10})
    ->Args({static_cast<int>(Family::B), 3, 9})
    ->Args({static_cast<int>(Family::AffineA), 3, 8})
    ->Args({static_cast<int>(Family::AffineC), 2, 8})
    ->Unit(benchmark::kMillisecond);

void BM_CoxeterLength(benchmark::State& state) {
  const GroupSpec spec(Family::AffineC, 4);
  Element w = Element::identity(spec);
  for (int k = 0; k < 40; ++k) w = right_multiply(w, k % 5);
  for (auto _ : state) benchmark::DoNotOptimize(coxeter_length(w));
}
BENCHMARK(BM_CoxeterLength);

void BM_Global321(benchmark::State& state) {
  const GroupSpec spec(Family::AffineA, 6);
  Element w = Element::identity(spec);
  for (int k = 0; k < 30; ++k) w = right_multiply(w, (k * 4) % 6);
  for (auto _ : state) benchmark::DoNotOptimize(contains_global_321(w).has_value());
}
BENCHMARK(BM_Global321);

void BM_ReducedWordCount(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<std::int64_t> window(n);
  for (int i = 0; i < n; ++i) window[i] = n - i;
  const Element w0 = Element::from_window(GroupSpec(Family::A, n), window);
  for (auto _ : state) benchmark::DoNotOptimize(reduced_word_count(w0));
}
BENCHMARK(BM_ReducedWordCount)->DenseRange(4, 7);

void BM_PositiveRoots(benchmark::State& state) {
  const RootSystemSpec rs = root_system_for(GroupSpec(Family::AffineC, 3));
  const int H = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(positive_roots_up_to_height(rs, H).size());
}
BENCHMARK(BM_PositiveRoots)->Arg(10)->Arg(20);

void BM_HeightCost(benchmark::State& state) {
  const GroupSpec spec(Family::B, 4);
  const RootSystemSpec rs = root_system_for(spec);
  const Element w = Element::from_window(spec, {-4, -3, -2, -1});
  for (auto _ : state) benchmark::DoNotOptimize(min_height_cost(w, rs));
}
BENCHMARK(BM_HeightCost)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
