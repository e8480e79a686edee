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

#include "mlgp/multilevel.h"
#include "oracles.h"
#include "test_graphs.h"

namespace mlgp {
namespace {

PartitionConfig config(BlockID k, double eps, std::uint64_t seed = 0) {
  PartitionConfig c;
  c.k = k;
  c.eps = eps;
  c.seed = seed;
  return c;
}

std::vector<std::uint32_t> blocks_of(const Partition& p) {
  return {p.assignment().begin(), p.assignment().end()};
}

TEST(ConfigTest, ValidateRejectsBadValues) {
  EXPECT_THROW(config(0, 0.1).validate(), InputError);
  EXPECT_THROW(config(2, -0.1).validate(), InputError);
  PartitionConfig c = config(2, 0.1);
  c.rounds = 0;
  EXPECT_THROW(c.validate(), InputError);
}

TEST(CoarsenTest, SmallGraphIsSingleLevel) {
  PartitionConfig c = config(2, 0.03);
  c.coarsen_stop = 50;
  EXPECT_EQ(coarsen(testing::grid(5, 5), c).num_levels(), 1u);
}

TEST(CoarsenTest, EdgelessIsSingleLevel) {
  PartitionConfig c = config(2, 0.03);
  c.coarsen_stop = 2;
  EXPECT_EQ(coarsen(testing::edgeless(100), c).num_levels(), 1u);
}

TEST(CoarsenTest, LevelsShrinkStrictly) {
  Rng rng(4);
  const Graph g = testing::random_connected(1000, 0.004, rng, 1, 1);
  PartitionConfig c = config(2, 0.03, 3);
  c.coarsen_stop = 50;
  const Hierarchy h = coarsen(g, c);
  ASSERT_GE(h.num_levels(), 2u);
  for (std::size_t i = 1; i < h.num_levels(); ++i) {
    EXPECT_LT(h.levels[i].n(), h.levels[i - 1].n());
    EXPECT_EQ(h.levels[i].total_node_weight(), g.total_node_weight());
    EXPECT_EQ(h.maps[i - 1].size(), h.levels[i - 1].n());
  }
  const Weight lmax = max_block_weight(g.total_node_weight(), 2, 0.03);
  EXPECT_LE(h.coarsest().max_node_weight(), std::max<Weight>(lmax / 2, 1));
}

TEST(InitialPartitionTest, TwoNodesEqualWeights) {
  const Graph g = testing::path(2);
  const Partition p = initial_partition(g, config(2, 0.0));
  EXPECT_NE(p.block(0), p.block(1));
}

TEST(InitialPartitionTest, TriangleThreeWays) {
  const Graph g = testing::triangle();
  const Partition p = initial_partition(g, config(3, 0.0));
  EXPECT_TRUE(p.is_balanced());
  EXPECT_EQ(cut_value(g, p), 3);
}

TEST(InitialPartitionTest, TwoTrianglesOptimal) {
  const Graph g = testing::two_triangles();
  const Partition p = initial_partition(g, config(2, 0.0, 6));
  EXPECT_TRUE(p.is_balanced());
  EXPECT_LE(cut_value(g, p), 3);
}

TEST(RepairTest, FixesOverloadWhenPossible) {
  const Graph g = testing::path(6);
  Partition p(g, 2, 0.0, {0, 0, 0, 0, 0, 1});
  EXPECT_TRUE(repair_balance(g, p));
  EXPECT_TRUE(p.is_balanced());
}

TEST(FmTest, LocalOptimumUnchanged) {
  const Graph g = testing::two_triangles();
  const Partition p(g, 2, 0.0, {0, 0, 0, 1, 1, 1});
  EXPECT_EQ(fm_refine(g, p, config(2, 0.0)), p);
}

TEST(FmTest, TwoTrianglesFromCutThree) {
  const Graph g = testing::two_triangles();
  const Partition p(g, 2, 0.5, {0, 0, 0, 1, 0, 1});
  ASSERT_TRUE(p.is_balanced());
  EXPECT_EQ(cut_value(g, p), 3);
  EXPECT_EQ(cut_value(g, fm_refine(g, p, config(2, 0.5))), 1);
}

TEST(FmTest, SwapAtZeroImbalance) {
  // Only a pair exchange fixes the cut; a single move would overload a block.
  const Graph g = testing::two_triangles();
  const Partition p(g, 2, 0.0, {0, 0, 1, 0, 1, 1});
  const Partition r = fm_refine(g, p, config(2, 0.0));
  EXPECT_TRUE(r.is_balanced());
  EXPECT_EQ(cut_value(g, r), 1);
}

TEST(FmTest, SingleBlockUnchanged) {
  const Graph g = testing::grid(4, 4);
  const Partition p = Partition::single_block(g, 1, 0.0);
  EXPECT_EQ(cut_value(g, fm_refine(g, p, config(1, 0.0))), 0);
}

TEST(FmTest, MonotoneAndBalancedProperty) {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_connected(2 + static_cast<NodeID>(rng.below(80)), 0.08, rng, 3, 4);
    const BlockID k = 2 + static_cast<BlockID>(rng.below(4));
    std::vector<BlockID> blocks(g.n());
    for (NodeID v = 0; v < g.n(); ++v) blocks[v] = static_cast<BlockID>(rng.below(k));
    const Partition p(g, k, 0.5, blocks);
    if (!p.is_balanced()) continue;
    const Partition r = fm_refine(g, p, config(k, 0.5, trial));
    EXPECT_TRUE(r.is_balanced());
    EXPECT_LE(cut_value(g, r), cut_value(g, p));
  }
}

TEST(PartitionTest, TriangleLooseBalance) {
  // L_max = 4 exceeds c(V), so the empty-block bisection is admissible.
  const Graph g = testing::triangle();
  const Partition p = partition(g, config(2, 1.0));
  EXPECT_EQ(cut_value(g, p), *oracle::optimal_bisection_cut(g, 4));
  EXPECT_TRUE(p.is_balanced());
}

TEST(PartitionTest, TriangleTightBalance) {
  const Graph g = testing::triangle();
  const Partition p = partition(g, config(2, 0.0));
  EXPECT_EQ(cut_value(g, p), 2);
  EXPECT_TRUE(p.is_balanced());
}

TEST(PartitionTest, TwoTrianglesExact) {
  const Graph g = testing::two_triangles();
  const Partition p = partition(g, config(2, 0.0));
  EXPECT_EQ(cut_value(g, p), 1);
}

TEST(PartitionTest, SingleBlock) {
  const Graph g = testing::grid(3, 4);
  const Partition p = partition(g, config(1, 0.0));
  EXPECT_EQ(cut_value(g, p), 0);
}

TEST(PartitionTest, InfeasibleInstanceThrows) {
  GraphBuilder b(3);
  b.set_node_weight(0, 10);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  EXPECT_THROW(partition(std::move(b).build(), config(2, 0.0)), InfeasibleError);
}

TEST(PartitionTest, MoreBlocksThanNodes) {
  const Graph g = testing::path(3);
  const Partition p = partition(g, config(5, 0.0));
  EXPECT_TRUE(p.is_balanced());
}

TEST(PartitionTest, TraceNeverWorsensAtAnyLevel) {
  Rng rng(31);
  const Graph g = testing::random_connected(3000, 0.002, rng, 2, 3);
  PartitionConfig c = config(4, 0.03, 5);
  c.coarsen_stop = 100;
  MultilevelTrace trace;
  const Partition p = partition(g, c, &trace);
  EXPECT_TRUE(p.is_balanced());
  ASSERT_EQ(trace.projected_cut.size(), trace.refined_cut.size());
  for (std::size_t i = 0; i < trace.refined_cut.size(); ++i) {
    EXPECT_LE(trace.refined_cut[i], trace.projected_cut[i]);
  }
  EXPECT_EQ(trace.refined_cut.back(), cut_value(g, p));
}

TEST(PartitionTest, Deterministic) {
  Rng rng(1);
  const Graph g = testing::random_connected(500, 0.01, rng, 2, 2);
  EXPECT_EQ(partition(g, config(3, 0.03, 9)), partition(g, config(3, 0.03, 9)));
}

TEST(PartitionTest, MatchesOracleOnSmallGraphs) {
  Rng rng(41);
  int matched = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testing::random_connected(8, 0.4, rng, 1, 3);
    const Weight lmax = max_block_weight(g.total_node_weight(), 2, 0.5);
    const Partition p = partition(g, config(2, 0.5, trial));
    EXPECT_TRUE(p.is_balanced());
    matched += cut_value(g, p) == *oracle::optimal_bisection_cut(g, lmax);
  }
  EXPECT_GE(matched, 27);
}

TEST(CombineTest, IdenticalParents) {
  Rng rng(3);
  const Graph g = testing::random_connected(40, 0.1, rng, 1, 2);
  const Partition p = partition(g, config(2, 0.03, 1));
  EXPECT_LE(cut_value(g, combine(g, p, p, config(2, 0.03, 2))), cut_value(g, p));
}

TEST(CombineTest, TwoTrianglesReachesOptimum) {
  const Graph g = testing::two_triangles();
  const Partition p1(g, 2, 0.5, {0, 0, 0, 1, 0, 1});
  const Partition p2(g, 2, 0.5, {0, 0, 0, 1, 1, 1});
  EXPECT_EQ(cut_value(g, combine(g, p1, p2, config(2, 0.5))), 1);
}

TEST(CombineTest, FullyDisagreeingParents) {
  const Graph g = testing::path(6);
  const Partition p1(g, 2, 0.0, {0, 1, 0, 1, 0, 1});
  const Partition p2(g, 2, 0.0, {1, 0, 1, 0, 1, 0});
  const Partition c = combine(g, p1, p2, config(2, 0.0));
  EXPECT_TRUE(c.is_balanced());
  EXPECT_LE(cut_value(g, c), 5);
}

TEST(CombineTest, MismatchedParentsRejected) {
  const Graph g = testing::path(4);
  const Partition p1(g, 2, 0.0, {0, 0, 1, 1});
  const Partition p2(g, 3, 0.0, {0, 1, 2, 2});
  EXPECT_THROW(combine(g, p1, p2, config(2, 0.0)), InputError);
}

}  // namespace
}  // namespace mlgp
