// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <map>
#include <utility>

#include "sorklie/clique.hpp"
#include "sorklie/sork.hpp"

namespace {

using sorklie::Family;

const sorklie::OrthogonalityGraph& graph_for(Family f, int rank) {
  static std::map<std::pair<char, int>, sorklie::OrthogonalityGraph> cache;
  const auto key = std::make_pair(static_cast<char>(f), rank);
  auto it = cache.find(key);
  if (it == cache.end()) {
    const auto phi = sorklie::build_root_system(sorklie::RootSystemType::make(f, rank));
    it = cache.emplace(key, sorklie::strong_orthogonality_graph(phi)).first;
  }
  return it->second;
}

template <Family F, int Rank>
void BM_Serial(benchmark::State& state) {
  const auto& g = graph_for(F, Rank).graph;
  for (auto _ : state) benchmark::DoNotOptimize(sorklie::clique::max_clique_serial(g));
}

template <Family F, int Rank>
void BM_Parallel(benchmark::State& state) {
  sorklie::clique::set_num_threads(static_cast<int>(state.range(0)));
  const auto& g = graph_for(F, Rank).graph;
  for (auto _ : state) benchmark::DoNotOptimize(sorklie::clique::max_clique_parallel(g));
}

void BM_GraphBuild(benchmark::State& state) {
  sorklie::clique::set_num_threads(static_cast<int>(state.range(0)));
  const auto phi = sorklie::build_root_system(sorklie::RootSystemType::make(Family::E, 8));
  for (auto _ : state) benchmark::DoNotOptimize(sorklie::strong_orthogonality_graph(phi));
}

}  // namespace

BENCHMARK(BM_Serial<Family::E, 8>)->Name("serial/E8");
BENCHMARK(BM_Parallel<Family::E, 8>)->Name("parallel/E8")->DenseRange(1, 4);
BENCHMARK(BM_Serial<Family::D, 12>)->Name("serial/D12");
BENCHMARK(BM_Parallel<Family::D, 12>)->Name("parallel/D12")->DenseRange(1, 4);
BENCHMARK(BM_Serial<Family::B, 12>)->Name("serial/B12");
BENCHMARK(BM_Parallel<Family::B, 12>)->Name("parallel/B12")->DenseRange(1, 4);
BENCHMARK(BM_GraphBuild)->Name("graph/E8")->DenseRange(1, 4);

BENCHMARK_MAIN();
