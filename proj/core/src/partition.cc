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

#include "mlgp/partition.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace mlgp {

Weight max_block_weight(Weight total, BlockID k, double eps) {
  const Weight per_block = (total + k - 1) / k;
  const long double bound =
      (1.0L + static_cast<long double>(eps)) * static_cast<long double>(per_block);
  // Absorb representation error such as 1.03 * 100 = 103.00000000000001.
  return static_cast<Weight>(std::floor(bound + 1e-9L));
}

Partition::Partition(const Graph& g, BlockID k, double eps,
                     std::vector<BlockID> assignment)
    : k_(k),
      eps_(eps),
      total_weight_(g.total_node_weight()),
      lmax_(max_block_weight(g.total_node_weight(), k, eps)),
      assignment_(std::move(assignment)),
      block_weights_(k, 0) {
  if (k == 0) throw InputError("k must be at least 1");
  if (eps < 0) throw InputError("eps must be non-negative");
  if (assignment_.size() != g.n()) {
    throw InputError("partition has " + std::to_string(assignment_.size()) +
                     " entries but graph has " + std::to_string(g.n()) +
                     " nodes");
  }
  for (NodeID v = 0; v < g.n(); ++v) {
    if (assignment_[v] >= k) {
      throw InputError("node " + std::to_string(v) + " assigned to block " +
                       std::to_string(assignment_[v]) + " >= k");
    }
    block_weights_[assignment_[v]] += g.node_weight(v);
  }
}

Partition::Partition(BlockID k, double eps, Weight total_weight,
                     std::vector<BlockID> assignment,
                     std::vector<Weight> block_weights)
    : k_(k),
      eps_(eps),
      total_weight_(total_weight),
      lmax_(max_block_weight(total_weight, k, eps)),
      assignment_(std::move(assignment)),
      block_weights_(std::move(block_weights)) {}

Partition Partition::single_block(const Graph& g, BlockID k, double eps) {
  return Partition(g, k, eps, std::vector<BlockID>(g.n(), 0));
}

Weight Partition::heaviest_block() const {
  return block_weights_.empty()
             ? 0
             : *std::max_element(block_weights_.begin(), block_weights_.end());
}

void Clustering::compact() {
  std::vector<NodeID> remap(cluster_weight.size(), kInvalidNode);
  NodeID next = 0;
  for (std::size_t c = 0; c < cluster_weight.size(); ++c) {
    if (cluster_weight[c] > 0) remap[c] = next++;
  }
  std::vector<Weight> weights(next);
  for (std::size_t c = 0; c < cluster_weight.size(); ++c) {
    if (remap[c] != kInvalidNode) weights[remap[c]] = cluster_weight[c];
  }
  for (auto& c : assignment) c = remap[c];
  cluster_weight = std::move(weights);
  num_clusters = next;
}

Contraction contract(const Graph& g, const Clustering& input) {
  Clustering clustering = input;
  clustering.compact();
  const NodeID coarse_n = clustering.num_clusters;

  // Bucket fine nodes by cluster.
  std::vector<NodeID> bucket_start(coarse_n + 1, 0);
  for (NodeID v = 0; v < g.n(); ++v) ++bucket_start[clustering.assignment[v] + 1];
  for (NodeID c = 0; c < coarse_n; ++c) bucket_start[c + 1] += bucket_start[c];
  std::vector<NodeID> members(g.n());
  {
    std::vector<NodeID> fill(bucket_start.begin(), bucket_start.end() - 1);
    for (NodeID v = 0; v < g.n(); ++v) {
      members[fill[clustering.assignment[v]]++] = v;
    }
  }

  std::vector<EdgeID> offsets(coarse_n + 1, 0);
  std::vector<NodeID> targets;
  std::vector<Weight> arc_weights;
  std::vector<Weight> node_weights(coarse_n, 0);
  std::vector<Weight> accumulator(coarse_n, 0);
  std::vector<NodeID> touched;
  for (NodeID c = 0; c < coarse_n; ++c) {
    touched.clear();
    for (NodeID i = bucket_start[c]; i < bucket_start[c + 1]; ++i) {
      const NodeID v = members[i];
      node_weights[c] += g.node_weight(v);
      g.for_each_neighbor(v, [&](NodeID u, Weight w) {
        const NodeID cu = clustering.assignment[u];
        if (cu == c) return;
        if (accumulator[cu] == 0) touched.push_back(cu);
        accumulator[cu] += w;
      });
    }
    std::sort(touched.begin(), touched.end());
    for (const NodeID cu : touched) {
      targets.push_back(cu);
      arc_weights.push_back(accumulator[cu]);
      accumulator[cu] = 0;
    }
    offsets[c + 1] = targets.size();
  }
  return {Graph(std::move(offsets), std::move(targets), std::move(node_weights),
                std::move(arc_weights)),
          std::move(clustering.assignment)};
}

Partition project_partition(const Partition& coarse,
                            std::span<const NodeID> coarse_map) {
  std::vector<BlockID> fine(coarse_map.size());
  for (std::size_t v = 0; v < coarse_map.size(); ++v) {
    fine[v] = coarse.block(coarse_map[v]);
  }
  return Partition(coarse.k(), coarse.eps(), coarse.total_weight(),
                   std::move(fine),
                   std::vector<Weight>(coarse.block_weights().begin(),
                                       coarse.block_weights().end()));
}

Weight cut_value(const Graph& g, std::span<const BlockID> assignment) {
  Weight cut = 0;
  for (NodeID v = 0; v < g.n(); ++v) {
    g.for_each_neighbor(v, [&](NodeID u, Weight w) {
      if (u > v && assignment[u] != assignment[v]) cut += w;
    });
  }
  return cut;
}

}  // namespace mlgp
