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
#include <utility>
#include <vector>

#include "mlgp/types.h"

namespace mlgp {

// Undirected weighted graph in compressed adjacency form. Every undirected
// edge is stored as two arcs with equal weight. Neighbor lists are sorted,
// there are no self-loops and no parallel arcs, and all weights are >= 1.
// Immutable after construction.
class Graph {
 public:
  Graph() : offsets_{0} {}

  // Validates every invariant above and throws InputError on violation.
  Graph(std::vector<EdgeID> offsets, std::vector<NodeID> targets,
        std::vector<Weight> node_weights, std::vector<Weight> arc_weights);

  NodeID n() const { return static_cast<NodeID>(node_weights_.size()); }
  EdgeID m() const { return targets_.size() / 2; }
  EdgeID num_arcs() const { return targets_.size(); }

  EdgeID first_arc(NodeID v) const { return offsets_[v]; }
  EdgeID end_arc(NodeID v) const { return offsets_[v + 1]; }
  NodeID degree(NodeID v) const {
    return static_cast<NodeID>(offsets_[v + 1] - offsets_[v]);
  }
  NodeID arc_target(EdgeID a) const { return targets_[a]; }
  Weight arc_weight(EdgeID a) const { return arc_weights_[a]; }

  std::span<const NodeID> neighbors(NodeID v) const {
    return {targets_.data() + offsets_[v], degree(v)};
  }
  std::span<const Weight> neighbor_weights(NodeID v) const {
    return {arc_weights_.data() + offsets_[v], degree(v)};
  }

  template <typename F>
  void for_each_neighbor(NodeID v, F&& f) const {
    for (EdgeID a = offsets_[v]; a < offsets_[v + 1]; ++a) {
      f(targets_[a], arc_weights_[a]);
    }
  }

  Weight node_weight(NodeID v) const { return node_weights_[v]; }
  Weight total_node_weight() const { return total_node_weight_; }
  Weight max_node_weight() const { return max_node_weight_; }
  // Sum over undirected edges.
  Weight total_edge_weight() const { return total_edge_weight_; }

  // Index of the arc v->u, or num_arcs() if absent. O(log deg(v)).
  EdgeID find_arc(NodeID v, NodeID u) const;

  std::span<const EdgeID> offsets() const { return offsets_; }
  std::span<const NodeID> targets() const { return targets_; }
  std::span<const Weight> node_weights() const { return node_weights_; }
  std::span<const Weight> arc_weights() const { return arc_weights_; }

  bool operator==(const Graph& other) const;

 private:
  std::vector<EdgeID> offsets_;
  std::vector<NodeID> targets_;
  std::vector<Weight> node_weights_;
  std::vector<Weight> arc_weights_;
  Weight total_node_weight_ = 0;
  Weight max_node_weight_ = 0;
  Weight total_edge_weight_ = 0;
};

// Accumulates arcs in any order. build() sorts adjacency lists, drops
// self-loops and merges parallel arcs by summing their weights. Symmetry is
// checked by the Graph constructor.
class GraphBuilder {
 public:
  explicit GraphBuilder(NodeID n);

  void set_node_weight(NodeID v, Weight w);
  void add_arc(NodeID from, NodeID to, Weight w = 1);
  // Adds both arcs of an undirected edge.
  void add_edge(NodeID u, NodeID v, Weight w = 1);

  NodeID n() const { return static_cast<NodeID>(node_weights_.size()); }

  Graph build() &&;

 private:
  std::vector<Weight> node_weights_;
  std::vector<std::vector<std::pair<NodeID, Weight>>> adjacency_;
};

// Subgraph induced by `nodes` (in that order). Local node i corresponds to
// nodes[i]. Node weights are replaced by 1 when unit_weights is set.
Graph induced_subgraph(const Graph& g, std::span<const NodeID> nodes,
                       bool unit_weights = false);

}  // namespace mlgp
