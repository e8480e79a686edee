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

#pragma once

#include <span>
#include <vector>

#include "mlgp/graph.h"

namespace mlgp {

// L_max = (1 + eps) * ceil(total / k), rounded down to an integer since all
// weights are integral.
Weight max_block_weight(Weight total, BlockID k, double eps);

// Node -> block assignment for a fixed k with per-block weights.
class Partition {
 public:
  Partition() = default;

  // Computes block weights from `g`. Throws InputError on a block id >= k.
  Partition(const Graph& g, BlockID k, double eps,
            std::vector<BlockID> assignment);

  // For callers that already know the block weights (projection).
  Partition(BlockID k, double eps, Weight total_weight,
            std::vector<BlockID> assignment, std::vector<Weight> block_weights);

  static Partition single_block(const Graph& g, BlockID k, double eps);

  BlockID k() const { return k_; }
  double eps() const { return eps_; }
  NodeID n() const { return static_cast<NodeID>(assignment_.size()); }
  Weight total_weight() const { return total_weight_; }
  Weight lmax() const { return lmax_; }

  BlockID block(NodeID v) const { return assignment_[v]; }
  Weight block_weight(BlockID b) const { return block_weights_[b]; }
  std::span<const BlockID> assignment() const { return assignment_; }
  std::span<const Weight> block_weights() const { return block_weights_; }
  Weight heaviest_block() const;

  bool is_balanced() const { return heaviest_block() <= lmax_; }
  bool fits(BlockID b, Weight w) const { return block_weights_[b] + w <= lmax_; }

  void move(NodeID v, BlockID to, Weight node_weight) {
    block_weights_[assignment_[v]] -= node_weight;
    block_weights_[to] += node_weight;
    assignment_[v] = to;
  }

  bool operator==(const Partition& other) const = default;

 private:
  BlockID k_ = 1;
  double eps_ = 0.0;
  Weight total_weight_ = 0;
  Weight lmax_ = 0;
  std::vector<BlockID> assignment_;
  std::vector<Weight> block_weights_;
};

// Node -> cluster assignment with per-cluster weights. Cluster ids lie in
// [0, cluster_weight.size()); empty clusters may exist until compact().
struct Clustering {
  std::vector<NodeID> assignment;
  std::vector<Weight> cluster_weight;
  NodeID num_clusters = 0;

  // Renumbers non-empty clusters to 0..num_clusters-1 in increasing order of
  // their current id.
  void compact();
};

// Coarsening levels from finest (levels[0]) to coarsest. maps[i] sends nodes
// of levels[i] to nodes of levels[i + 1].
struct Hierarchy {
  std::vector<Graph> levels;
  std::vector<std::vector<NodeID>> maps;

  const Graph& finest() const { return levels.front(); }
  const Graph& coarsest() const { return levels.back(); }
  std::size_t num_levels() const { return levels.size(); }
};

struct Contraction {
  Graph coarse;
  std::vector<NodeID> coarse_map;
};

// One coarse node per non-empty cluster, inter-cluster edge weights summed,
// intra-cluster edges dropped.
Contraction contract(const Graph& g, const Clustering& clustering);

// fine[v] = coarse[coarse_map[v]]. Block weights carry over unchanged.
Partition project_partition(const Partition& coarse,
                            std::span<const NodeID> coarse_map);

Weight cut_value(const Graph& g, std::span<const BlockID> assignment);
inline Weight cut_value(const Graph& g, const Partition& p) {
  return cut_value(g, p.assignment());
}

}  // namespace mlgp
