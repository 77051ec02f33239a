#include <benchmark/benchmark.h>

#include <random>

#include "sgspec/cycles.hpp"
#include "sgspec/extremal.hpp"
#include "sgspec/search.hpp"
#include "sgspec/spectral.hpp"

namespace {

sgspec::SignedGraph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(p);
  std::bernoulli_distribution negative(0.3);
  std::vector<sgspec::SignedEdge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) edges.push_back({u, v, negative(rng) ? sgspec::Sign::negative : sgspec::Sign::positive});
  return sgspec::SignedGraph::from_edges(n, edges);
}

void BM_EigenSpectrum(benchmark::State& state) {
  const auto a = sgspec::adjacency_matrix(random_graph(static_cast<int>(state.range(0)), 0.3, 1));
  for (auto _ : state) benchmark::DoNotOptimize(sgspec::eigen_spectrum(a));
}
BENCHMARK(BM_EigenSpectrum)->Arg(10)->Arg(40)->Arg(100);

void BM_NegativeC4(benchmark::State& state) {
  const auto g = sgspec::build_gamma_rs(sgspec::ExtremalParams(static_cast<int>(state.range(0)),
                                                               static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(sgspec::has_negative_c4(g));
}
BENCHMARK(BM_NegativeC4)->Arg(8)->Arg(32);

void BM_ShortestNegativeCycle(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 0.2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(sgspec::shortest_negative_cycle(g));
}
BENCHMARK(BM_ShortestNegativeCycle)->Arg(20)->Arg(60);

void BM_Search(benchmark::State& state) {
  sgspec::SearchSpace space;
  space.r = static_cast<int>(state.range(0));
  space.s = static_cast<int>(state.range(1));
  space.jobs = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sgspec::run_search(space));
}
BENCHMARK(BM_Search)->Args({3, 4})->Args({4, 4})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
