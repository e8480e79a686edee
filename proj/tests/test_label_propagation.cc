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

#include <gtest/gtest.h>

#include "mlgp/label_propagation.h"
#include "oracles.h"
#include "test_graphs.h"

namespace mlgp {
namespace {

LabelPropagationOptions options(int rounds, std::uint64_t seed) {
  LabelPropagationOptions o;
  o.rounds = rounds;
  o.seed = seed;
  return o;
}

std::size_t num_clusters(const Clustering& c) {
  std::vector<NodeID> ids(c.assignment.begin(), c.assignment.end());
  std::ranges::sort(ids);
  return static_cast<std::size_t>(std::ranges::unique(ids).begin() - ids.begin());
}

TEST(SclapClusterTest, EdgelessStaysSingletons) {
  const Graph g = testing::edgeless(7);
  EXPECT_EQ(num_clusters(sclap_cluster(g, 100, options(5, 1))), 7u);
}

TEST(SclapClusterTest, TriangleMergesUnderBoundThree) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(num_clusters(sclap_cluster(testing::triangle(), 3, options(2, seed))), 1u);
  }
}

TEST(SclapClusterTest, BoundOneKeepsSingletons) {
  EXPECT_EQ(num_clusters(sclap_cluster(testing::triangle(), 1, options(4, 9))), 3u);
}

TEST(SclapClusterTest, BoundBelowNodeWeightIsRejected) {
  GraphBuilder b(2);
  b.set_node_weight(0, 5);
  b.add_edge(0, 1, 1);
  const Graph g = std::move(b).build();
  EXPECT_THROW(sclap_cluster(g, 4, options(1, 0)), InputError);
}

TEST(SclapClusterTest, SizeSafetyAfterEveryMove) {
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing::random_connected(60, 0.08, rng, 4, 3);
    const Weight bound = g.max_node_weight() + static_cast<Weight>(rng.below(10));
    std::vector<Weight> weight(g.n());
    std::vector<NodeID> cluster(g.n());
    for (NodeID v = 0; v < g.n(); ++v) {
      weight[v] = g.node_weight(v);
      cluster[v] = v;
    }
    bool safe = true;
    LabelPropagationOptions o = options(4, trial);
    o.on_move = [&](NodeID v, std::uint32_t from, std::uint32_t to) {
      EXPECT_EQ(cluster[v], from);
      weight[from] -= g.node_weight(v);
      weight[to] += g.node_weight(v);
      cluster[v] = to;
      safe &= weight[to] <= bound;
    };
    const Clustering c = sclap_cluster(g, bound, o);
    EXPECT_TRUE(safe);
    for (const Weight w : c.cluster_weight) EXPECT_LE(w, bound);
  }
}

TEST(SclapClusterTest, RegionsConfineClusters) {
  const Graph g = testing::complete(6);
  const std::vector<NodeID> regions{0, 0, 0, 1, 1, 1};
  const Clustering c = sclap_cluster(g, 6, options(3, 4), regions);
  for (NodeID u = 0; u < g.n(); ++u) {
    for (NodeID v = 0; v < g.n(); ++v) {
      if (c.assignment[u] == c.assignment[v]) EXPECT_EQ(regions[u], regions[v]);
    }
  }
}

TEST(SclapClusterTest, Deterministic) {
  Rng rng(2);
  const Graph g = testing::random_connected(200, 0.03, rng, 3, 3);
  const Clustering a = sclap_cluster(g, 10, options(3, 77));
  const Clustering b = sclap_cluster(g, 10, options(3, 77));
  EXPECT_EQ(a.assignment, b.assignment);
  EXPECT_EQ(a.cluster_weight, b.cluster_weight);
}

TEST(SclapClusterTest, ConvergenceSkipsRemainingRounds) {
  LabelPropagationStats stats;
  sclap_cluster(testing::edgeless(5), 3, options(10, 0), {}, &stats);
  EXPECT_EQ(stats.rounds_run, 1);
  EXPECT_EQ(stats.moves, 0u);
}

TEST(SclapRefineTest, LocalOptimumUnchanged) {
  const Graph g = testing::two_triangles();
  const Partition p(g, 2, 0.0, {0, 0, 0, 1, 1, 1});
  const Partition r = sclap_refine(g, p, options(3, 5));
  EXPECT_EQ(r, p);
  EXPECT_EQ(cut_value(g, r), 1);
}

TEST(SclapRefineTest, MixedStartDoesNotWorsen) {
  const Graph g = testing::two_triangles();
  const Partition p(g, 2, 0.5, {0, 0, 0, 1, 0, 1});
  EXPECT_EQ(cut_value(g, p), 3);
  EXPECT_LE(cut_value(g, sclap_refine(g, p, options(3, 1))), 3);
}

TEST(SclapRefineTest, SingleBlockUnchanged) {
  const Graph g = testing::grid(3, 3);
  const Partition p = Partition::single_block(g, 1, 0.0);
  EXPECT_EQ(sclap_refine(g, p, options(3, 0)), p);
}

TEST(SclapRefineTest, UnbalancedInputRejected) {
  const Graph g = testing::path(4);
  EXPECT_THROW(sclap_refine(g, Partition(g, 2, 0.0, {0, 0, 0, 1}), options(1, 0)), InputError);
}

TEST(SclapRefineTest, MonotoneAndBalancedProperty) {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_connected(2 + static_cast<NodeID>(rng.below(60)), 0.1, rng, 3, 4);
    const BlockID k = 2 + static_cast<BlockID>(rng.below(3));
    std::vector<BlockID> blocks(g.n());
    for (NodeID v = 0; v < g.n(); ++v) blocks[v] = v % k;
    Partition p(g, k, 1.0, blocks);
    if (!p.is_balanced()) continue;
    const Partition r = sclap_refine(g, p, options(3, trial));
    EXPECT_TRUE(r.is_balanced());
    EXPECT_LE(cut_value(g, r), cut_value(g, p));
  }
}

}  // namespace
}  // namespace mlgp
