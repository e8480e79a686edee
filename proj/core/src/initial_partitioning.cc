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

#include <algorithm>
#include <queue>
#include <string>
#include <vector>

#include "mlgp/multilevel.h"
#include "mlgp/random.h"

namespace mlgp {

namespace {

std::vector<BlockID> random_assignment(const Graph& g, BlockID k, Weight lmax,
                                       Rng& rng) {
  std::vector<BlockID> assignment(g.n());
  std::vector<Weight> weights(k, 0);
  std::vector<BlockID> fitting;
  for (const NodeID v : rng.permutation(g.n())) {
    fitting.clear();
    for (BlockID b = 0; b < k; ++b) {
      if (weights[b] + g.node_weight(v) <= lmax) fitting.push_back(b);
    }
    BlockID target;
    if (fitting.empty()) {
      target = static_cast<BlockID>(
          std::min_element(weights.begin(), weights.end()) - weights.begin());
    } else {
      target = fitting[rng.below(fitting.size())];
    }
    assignment[v] = target;
    weights[target] += g.node_weight(v);
  }
  return assignment;
}

// Grows all blocks simultaneously by BFS from random seed nodes, one node per
// block per turn, until each block reaches ceil(c(V) / k).
std::vector<BlockID> bfs_growing(const Graph& g, BlockID k, Rng& rng) {
  const Weight target = (g.total_node_weight() + k - 1) / k;
  std::vector<BlockID> assignment(g.n(), kInvalidBlock);
  std::vector<Weight> weights(k, 0);
  std::vector<std::queue<NodeID>> frontier(k);
  const std::vector<NodeID> order = rng.permutation(g.n());
  std::size_t next_unassigned = 0;
  NodeID remaining = g.n();

  auto take_unassigned = [&]() -> NodeID {
    while (next_unassigned < order.size() &&
           assignment[order[next_unassigned]] != kInvalidBlock) {
      ++next_unassigned;
    }
    return next_unassigned < order.size() ? order[next_unassigned] : kInvalidNode;
  };
  auto assign = [&](NodeID v, BlockID b) {
    assignment[v] = b;
    weights[b] += g.node_weight(v);
    --remaining;
    for (const NodeID u : g.neighbors(v)) {
      if (assignment[u] == kInvalidBlock) frontier[b].push(u);
    }
  };

  while (remaining > 0) {
    bool grew = false;
    for (BlockID b = 0; b < k && remaining > 0; ++b) {
      if (weights[b] >= target) continue;
      NodeID v = kInvalidNode;
      while (!frontier[b].empty() && v == kInvalidNode) {
        const NodeID u = frontier[b].front();
        frontier[b].pop();
        if (assignment[u] == kInvalidBlock) v = u;
      }
      if (v == kInvalidNode) v = take_unassigned();
      if (v == kInvalidNode) break;
      assign(v, b);
      grew = true;
    }
    if (!grew) {
      // Every block reached the target; the rest goes to the lightest ones.
      const NodeID v = take_unassigned();
      const auto b = static_cast<BlockID>(
          std::min_element(weights.begin(), weights.end()) - weights.begin());
      assign(v, b);
    }
  }
  return assignment;
}

// Fills blocks 0..k-2 one after another, always adding the unassigned node
// with the strongest connection to the growing block.
std::vector<BlockID> greedy_growing(const Graph& g, BlockID k, Weight lmax,
                                    Rng& rng) {
  std::vector<BlockID> assignment(g.n(), kInvalidBlock);
  std::vector<Weight> conn(g.n(), 0);
  Weight remaining_weight = g.total_node_weight();
  const std::vector<NodeID> order = rng.permutation(g.n());
  std::size_t next_unassigned = 0;

  for (BlockID b = 0; b + 1 < k; ++b) {
    const Weight target = (remaining_weight + (k - b) - 1) / (k - b);
    Weight weight = 0;
    std::priority_queue<std::pair<Weight, NodeID>> queue;
    std::vector<NodeID> touched;
    while (weight < target) {
      NodeID v = kInvalidNode;
      while (!queue.empty()) {
        const auto [c, u] = queue.top();
        queue.pop();
        if (assignment[u] == kInvalidBlock && c == conn[u]) {
          v = u;
          break;
        }
      }
      if (v == kInvalidNode) {
        while (next_unassigned < order.size() &&
               assignment[order[next_unassigned]] != kInvalidBlock) {
          ++next_unassigned;
        }
        if (next_unassigned == order.size()) break;
        v = order[next_unassigned];
      }
      if (weight + g.node_weight(v) > lmax) break;
      assignment[v] = b;
      weight += g.node_weight(v);
      g.for_each_neighbor(v, [&](NodeID u, Weight w) {
        if (assignment[u] != kInvalidBlock) return;
        if (conn[u] == 0) touched.push_back(u);
        conn[u] += w;
        queue.emplace(conn[u], u);
      });
    }
    for (const NodeID u : touched) conn[u] = 0;
    remaining_weight -= weight;
  }
  for (auto& block : assignment) {
    if (block == kInvalidBlock) block = k - 1;
  }
  return assignment;
}

}  // namespace

bool repair_balance(const Graph& g, Partition& p) {
  const BlockID k = p.k();
  std::vector<Weight> conn(k, 0);
  while (!p.is_balanced()) {
    const auto weights = p.block_weights();
    const auto over = static_cast<BlockID>(
        std::max_element(weights.begin(), weights.end()) - weights.begin());
    Weight best_gain = 0;
    NodeID best_node = kInvalidNode;
    BlockID best_target = kInvalidBlock;
    for (NodeID v = 0; v < g.n(); ++v) {
      if (p.block(v) != over) continue;
      std::fill(conn.begin(), conn.end(), 0);
      g.for_each_neighbor(v, [&](NodeID u, Weight w) { conn[p.block(u)] += w; });
      for (BlockID t = 0; t < k; ++t) {
        if (t == over || !p.fits(t, g.node_weight(v))) continue;
        const Weight gain = conn[t] - conn[over];
        if (best_node == kInvalidNode || gain > best_gain) {
          best_gain = gain;
          best_node = v;
          best_target = t;
        }
      }
    }
    if (best_node == kInvalidNode) return false;
    p.move(best_node, best_target, g.node_weight(best_node));
  }
  return true;
}

Partition initial_partition(const Graph& g, const PartitionConfig& config) {
  config.validate();
  const BlockID k = config.k;
  const Weight lmax = max_block_weight(g.total_node_weight(), k, config.eps);
  if (g.max_node_weight() > lmax) {
    throw InfeasibleError("node weight " + std::to_string(g.max_node_weight()) +
                          " exceeds the block bound " + std::to_string(lmax));
  }
  if (k == 1) return Partition::single_block(g, 1, config.eps);

  Rng rng(config.seed);
  Partition best;
  Weight best_cut = 0;
  bool found = false;
  for (int attempt = 0; attempt < config.init_attempts; ++attempt) {
    for (int method = 0; method < 3; ++method) {
      Rng local = rng.split();
      std::vector<BlockID> assignment;
      switch (method) {
        case 0: assignment = random_assignment(g, k, lmax, local); break;
        case 1: assignment = bfs_growing(g, k, local); break;
        default: assignment = greedy_growing(g, k, lmax, local); break;
      }
      Partition candidate(g, k, config.eps, std::move(assignment));
      if (!repair_balance(g, candidate)) continue;
      PartitionConfig fm_config = config;
      fm_config.seed = local.next();
      candidate = fm_refine(g, std::move(candidate), fm_config);
      const Weight cut = cut_value(g, candidate);
      if (!found || cut < best_cut) {
        best = std::move(candidate);
        best_cut = cut;
        found = true;
      }
    }
  }
  if (!found) {
    throw InfeasibleError("no balanced " + std::to_string(k) +
                          "-way partition found for block bound " +
                          std::to_string(lmax));
  }
  return best;
}

}  // namespace mlgp
