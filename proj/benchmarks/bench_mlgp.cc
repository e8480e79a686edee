// Copyright 2026 The mlgp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <map>

#include <benchmark/benchmark.h>

#include "mlgp/ba_generator.h"
#include "mlgp/label_propagation.h"
#include "mlgp/multilevel.h"
#include "mlgp/separator.h"
#include "mlgp/spac.h"

namespace {

// Simple preferential-attachment graph with n nodes and about 4n edges.
const mlgp::Graph& ba_graph(std::uint64_t n) {
  static std::map<std::uint64_t, mlgp::Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    mlgp::BaParams p;
    p.n = n;
    p.d = 4;
    p.hash_seed = 42;
    it = cache.emplace(n, mlgp::simplify_edges(n, mlgp::ba_generate(p, 0, p.num_edges(), 4)))
             .first;
  }
  return it->second;
}

void BM_SclapCluster(benchmark::State& state) {
  const mlgp::Graph& g = ba_graph(state.range(0));
  mlgp::LabelPropagationOptions options;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mlgp::sclap_cluster(g, 64, options));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.num_arcs()));
}
BENCHMARK(BM_SclapCluster)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_Partition(benchmark::State& state) {
  const mlgp::Graph& g = ba_graph(state.range(0));
  mlgp::PartitionConfig config;
  config.k = static_cast<mlgp::BlockID>(state.range(1));
  for (auto _ : state) {
    const mlgp::Partition p = mlgp::partition(g, config);
    state.counters["cut"] = static_cast<double>(mlgp::cut_value(g, p));
  }
}
BENCHMARK(BM_Partition)
    ->Args({10'000, 2})
    ->Args({10'000, 16})
    ->Args({100'000, 8})
    ->Unit(benchmark::kMillisecond);

void BM_Separator(benchmark::State& state) {
  const mlgp::Graph& g = ba_graph(state.range(0));
  mlgp::PartitionConfig config;
  for (auto _ : state) {
    const mlgp::Separator s = mlgp::multilevel_separator(g, 0.2, config);
    state.counters["separator"] = static_cast<double>(s.separator_weight());
  }
}
BENCHMARK(BM_Separator)->Arg(10'000)->Unit(benchmark::kMillisecond);

void BM_EdgePartition(benchmark::State& state) {
  const mlgp::Graph& g = ba_graph(state.range(0));
  mlgp::PartitionConfig config;
  config.k = 4;
  for (auto _ : state) {
    const mlgp::EdgePartition ep = mlgp::edge_partition(g, config);
    state.counters["rf"] = mlgp::eval_edge_partition(g, ep).replication_factor;
  }
}
BENCHMARK(BM_EdgePartition)->Arg(10'000)->Unit(benchmark::kMillisecond);

void BM_BaGenerate(benchmark::State& state) {
  mlgp::BaParams p;
  p.n = 1'000'000;
  p.d = 8;
  p.hash_seed = 7;
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mlgp::ba_generate(p, 0, p.num_edges(), threads));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.num_edges()));
}
BENCHMARK(BM_BaGenerate)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
