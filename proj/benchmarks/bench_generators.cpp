#include <benchmark/benchmark.h>

#include "ktree/generators.hpp"

namespace {

void BM_KTree(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto n = static_cast<std::uint64_t>(state.range(1));
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(ktree::gen_k_tree(k, n, seed++));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_KTree)->Args({3, 100000})->Args({5, 100000})->Args({8, 100000})->Unit(benchmark::kMillisecond);

void BM_MixedKTree(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto probs = ktree::default_mixed_probabilities();
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(ktree::gen_mixed_k_tree(3, 12, probs, n, seed++));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MixedKTree)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_PartialKTree(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(ktree::gen_partial_k_tree(4, 100000, 20000, seed++));
}
BENCHMARK(BM_PartialKTree)->Unit(benchmark::kMillisecond);

void BM_BA(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(ktree::gen_ba(m, 100000, seed++));
}
BENCHMARK(BM_BA)->Arg(3)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_RegistrySample(benchmark::State& state) {
  const auto tree = ktree::gen_k_tree(static_cast<int>(state.range(0)), 100000, 1);
  ktree::Rng rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(tree.registry.sample(static_cast<int>(state.range(0)), rng));
}
BENCHMARK(BM_RegistrySample)->Arg(3)->Arg(8);

}  // namespace
