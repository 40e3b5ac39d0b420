#include <benchmark/benchmark.h>

#include "capdp/concave_conv.hpp"
#include "capdp/dag.hpp"
#include "capdp/generators.hpp"
#include "capdp/knapsack.hpp"
#include "capdp/monge.hpp"
#include "capdp/unbounded.hpp"

using namespace capdp;

namespace {

KnapsackInstance few_distinct(std::int64_t n, std::int64_t cap) {
  SplitMix64 rng(42);
  KnapsackParams p;
  p.n = static_cast<std::size_t>(n);
  p.capacity = cap;
  p.max_weight = 1000;
  p.max_value = 1000;
  p.distinct = 16;
  const RawKnapsack raw = gen_knapsack(KnapsackFamily::few_distinct, p, rng);
  return KnapsackInstance(raw.items, raw.capacity);
}

void BM_KnapsackTd(benchmark::State& state) {
  const auto inst = few_distinct(state.range(0), 100'000);
  for (auto _ : state) benchmark::DoNotOptimize(solve_knapsack_td(inst));
}
BENCHMARK(BM_KnapsackTd)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_KnapsackBellman(benchmark::State& state) {
  const auto inst = few_distinct(state.range(0), 100'000);
  for (auto _ : state) benchmark::DoNotOptimize(solve_knapsack_bellman(inst));
}
BENCHMARK(BM_KnapsackBellman)->Arg(10'000)->Unit(benchmark::kMillisecond);

void BM_UnboundedDoubling(benchmark::State& state) {
  SplitMix64 rng(42);
  const RawKnapsack raw = gen_unbounded(60, 100, 1000, 0, rng);
  const UnboundedInstance inst(raw.items, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_unbounded_doubling(inst));
}
BENCHMARK(BM_UnboundedDoubling)->RangeMultiplier(1000)->Range(1'000, 1'000'000'000);

void BM_ConvConcave(benchmark::State& state) {
  SplitMix64 rng(42);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  ValueProfile a, b;
  std::int64_t v = 0, d = 1000;
  for (std::size_t i = 0; i < n; ++i) {
    a.emplace_back(rng.uniform(-1000, 1000));
    b.emplace_back(v);
    v += d;
    d -= rng.uniform(0, 2);
  }
  for (auto _ : state) benchmark::DoNotOptimize(conv_concave(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConvConcave)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oN);

void BM_SparseSeparated(benchmark::State& state) {
  SplitMix64 rng(42);
  const auto a = gen_sequence(static_cast<std::size_t>(state.range(0)), -1000, 1000, rng);
  for (auto _ : state) benchmark::DoNotOptimize(solve_sparse_separated(a, 1000, 10));
}
BENCHMARK(BM_SparseSeparated)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_MongeAllK(benchmark::State& state) {
  const auto g = gen_squared_monge(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(monge_all_k(g, 0, g.last()));
}
BENCHMARK(BM_MongeAllK)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

void BM_MongeDp(benchmark::State& state) {
  const auto g = gen_squared_monge(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(monge_dp_hop_profile(g, 0, g.last(), g.last()));
}
BENCHMARK(BM_MongeDp)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
