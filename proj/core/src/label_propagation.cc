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

#include "mlgp/label_propagation.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "mlgp/random.h"

namespace mlgp {

namespace {

std::vector<NodeID> visit_order(const Graph& g, NodeOrder order, Rng& rng) {
  std::vector<NodeID> perm = rng.permutation(g.n());
  if (order == NodeOrder::kAscendingDegree) {
    std::stable_sort(perm.begin(), perm.end(), [&](NodeID a, NodeID b) {
      return g.degree(a) < g.degree(b);
    });
  }
  return perm;
}

// Sparse accumulator over labels.
class ConnectionMap {
 public:
  explicit ConnectionMap(std::size_t labels) : weight_(labels, 0) {}

  void add(std::uint32_t label, Weight w) {
    if (weight_[label] == 0) touched_.push_back(label);
    weight_[label] += w;
  }
  Weight operator[](std::uint32_t label) const { return weight_[label]; }
  std::span<const std::uint32_t> labels() const { return touched_; }

  void clear() {
    for (const auto label : touched_) weight_[label] = 0;
    touched_.clear();
  }

 private:
  std::vector<Weight> weight_;
  std::vector<std::uint32_t> touched_;
};

}  // namespace

Clustering sclap_cluster(const Graph& g, Weight size_bound,
                         const LabelPropagationOptions& options,
                         std::span<const NodeID> regions,
                         LabelPropagationStats* stats) {
  if (size_bound < g.max_node_weight()) {
    throw InputError("cluster size bound " + std::to_string(size_bound) +
                     " is smaller than the heaviest node (" +
                     std::to_string(g.max_node_weight()) + ")");
  }
  if (options.rounds < 1) throw InputError("rounds must be at least 1");
  if (!regions.empty() && regions.size() != g.n()) {
    throw InputError("region vector does not match graph size");
  }

  Clustering c;
  c.assignment.resize(g.n());
  std::iota(c.assignment.begin(), c.assignment.end(), NodeID{0});
  c.cluster_weight.assign(g.node_weights().begin(), g.node_weights().end());

  Rng rng(options.seed);
  ConnectionMap conn(g.n());
  std::vector<std::uint32_t> best;
  LabelPropagationStats local;

  for (int round = 0; round < options.rounds; ++round) {
    ++local.rounds_run;
    std::uint64_t moves_this_round = 0;
    for (const NodeID v : visit_order(g, options.order, rng)) {
      const Weight wv = g.node_weight(v);
      const NodeID own = c.assignment[v];
      g.for_each_neighbor(v, [&](NodeID u, Weight w) {
        if (regions.empty() || regions[u] == regions[v]) {
          conn.add(c.assignment[u], w);
        }
      });

      Weight best_conn = conn[own];
      best.clear();
      for (const auto label : conn.labels()) {
        if (label == own || c.cluster_weight[label] + wv > size_bound) continue;
        if (conn[label] > best_conn) {
          best_conn = conn[label];
          best.clear();
        }
        if (conn[label] == best_conn) best.push_back(label);
      }
      // On a tie with the own cluster only strictly larger clusters attract
      // the node, which keeps coarsening aggressive without churn.
      if (!best.empty() && best_conn == conn[own]) {
        std::erase_if(best, [&](std::uint32_t label) {
          return c.cluster_weight[label] <= c.cluster_weight[own];
        });
      }
      if (!best.empty() && best_conn > 0) {
        const NodeID target = best[rng.below(best.size())];
        c.cluster_weight[own] -= wv;
        c.cluster_weight[target] += wv;
        c.assignment[v] = target;
        ++moves_this_round;
        if (options.on_move) options.on_move(v, own, target);
      }
      conn.clear();
    }
    local.moves += moves_this_round;
    if (moves_this_round == 0) break;
  }

  c.num_clusters = static_cast<NodeID>(std::count_if(
      c.cluster_weight.begin(), c.cluster_weight.end(),
      [](Weight w) { return w > 0; }));
  if (stats) *stats = local;
  return c;
}

Partition sclap_refine(const Graph& g, Partition p,
                       const LabelPropagationOptions& options,
                       LabelPropagationStats* stats) {
  if (!p.is_balanced()) {
    throw InputError("label propagation refinement needs a balanced partition");
  }
  if (options.rounds < 1) throw InputError("rounds must be at least 1");

  Rng rng(options.seed);
  ConnectionMap conn(p.k());
  std::vector<BlockID> best;
  LabelPropagationStats local;

  for (int round = 0; round < options.rounds && p.k() > 1; ++round) {
    ++local.rounds_run;
    std::uint64_t moves_this_round = 0;
    for (const NodeID v : visit_order(g, options.order, rng)) {
      const Weight wv = g.node_weight(v);
      const BlockID own = p.block(v);
      g.for_each_neighbor(v, [&](NodeID u, Weight w) { conn.add(p.block(u), w); });

      Weight best_conn = conn[own];
      best.clear();
      for (const auto b : conn.labels()) {
        if (b == own || !p.fits(b, wv)) continue;
        if (conn[b] > best_conn) {
          best_conn = conn[b];
          best.clear();
          best.push_back(b);
        } else if (conn[b] == best_conn && !best.empty()) {
          best.push_back(b);
        }
      }
      if (!best.empty()) {
        const BlockID target = best[rng.below(best.size())];
        p.move(v, target, wv);
        ++moves_this_round;
        if (options.on_move) options.on_move(v, own, target);
      }
      conn.clear();
    }
    local.moves += moves_this_round;
    if (moves_this_round == 0) break;
  }
  if (stats) *stats = local;
  return p;
}

}  // namespace mlgp
