#include <benchmark/benchmark.h>

#include "ktree/communities.hpp"
#include "ktree/fitting.hpp"
#include "ktree/generators.hpp"
#include "ktree/metrics.hpp"
#include "ktree/sampling.hpp"

namespace {

const ktree::Graph& ktree5() {
  static const ktree::Graph g = ktree::gen_k_tree(5, 100000, 1).graph;
  return g;
}

void BM_Embeddedness(benchmark::State& state) {
  const auto& g = ktree5();
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ktree::embeddedness_distribution(g, workers));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.num_edges()));
}
BENCHMARK(BM_Embeddedness)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_CliqueEmbeddedness(benchmark::State& state) {
  const auto& g = ktree5();
  const int h = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ktree::clique_embeddedness_distribution(g, h));
}
BENCHMARK(BM_CliqueEmbeddedness)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Communities(benchmark::State& state) {
  const auto g = ktree::gen_partial_k_tree(4, static_cast<std::uint64_t>(state.range(0)),
                                           static_cast<std::uint64_t>(state.range(0)) / 5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ktree::k_clique_communities(g, 5));
}
BENCHMARK(BM_Communities)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_TwoRegimeFit(benchmark::State& state) {
  const auto g = ktree::generate({ktree::MixedKTreeModel{3, 12, ktree::default_mixed_probabilities(), 100000}, 1});
  const auto h = ktree::degree_distribution(g);
  for (auto _ : state) benchmark::DoNotOptimize(ktree::fit_two_regime(h));
}
BENCHMARK(BM_TwoRegimeFit)->Unit(benchmark::kMicrosecond);

void BM_MhrwWalk(benchmark::State& state) {
  const auto& g = ktree5();
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ktree::mhrw_walk(g, ktree::WalkConfig::with_default_burn_in(100000, seed++)));
  }
}
BENCHMARK(BM_MhrwWalk)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
