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

#include "mlgp/graph.h"

#include <algorithm>
#include <string>

namespace mlgp {

namespace {

Weight checked_add(Weight total, Weight w, const char* what) {
  if (w > kMaxTotalWeight - total) {
    throw InputError(std::string("total ") + what + " weight overflows");
  }
  return total + w;
}

}  // namespace

Graph::Graph(std::vector<EdgeID> offsets, std::vector<NodeID> targets,
             std::vector<Weight> node_weights, std::vector<Weight> arc_weights)
    : offsets_(std::move(offsets)),
      targets_(std::move(targets)),
      node_weights_(std::move(node_weights)),
      arc_weights_(std::move(arc_weights)) {
  const std::size_t n = node_weights_.size();
  if (offsets_.size() != n + 1 || offsets_.front() != 0 ||
      offsets_.back() != targets_.size() ||
      arc_weights_.size() != targets_.size()) {
    throw InputError("inconsistent adjacency array sizes");
  }
  if (targets_.size() % 2 != 0) {
    throw InputError("asymmetric adjacency: odd number of arcs");
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (offsets_[v] > offsets_[v + 1]) {
      throw InputError("adjacency offsets are not monotone");
    }
    const Weight w = node_weights_[v];
    if (w < 1) {
      throw InputError("node " + std::to_string(v + 1) +
                       " has non-positive weight");
    }
    total_node_weight_ = checked_add(total_node_weight_, w, "node");
    max_node_weight_ = std::max(max_node_weight_, w);
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (EdgeID a = offsets_[v]; a < offsets_[v + 1]; ++a) {
      const NodeID u = targets_[a];
      if (u >= n) {
        throw InputError("node " + std::to_string(v + 1) +
                         " has out-of-range neighbor " + std::to_string(u + 1));
      }
      if (u == v) {
        throw InputError("self-loop at node " + std::to_string(v + 1));
      }
      if (a > offsets_[v] && targets_[a - 1] >= u) {
        throw InputError("unsorted or parallel arcs at node " +
                         std::to_string(v + 1));
      }
      if (arc_weights_[a] < 1) {
        throw InputError("non-positive edge weight at node " +
                         std::to_string(v + 1));
      }
      const EdgeID back = find_arc(u, static_cast<NodeID>(v));
      if (back == num_arcs() || arc_weights_[back] != arc_weights_[a]) {
        throw InputError("asymmetric adjacency between nodes " +
                         std::to_string(v + 1) + " and " +
                         std::to_string(u + 1));
      }
      if (u > v) {
        total_edge_weight_ = checked_add(total_edge_weight_, arc_weights_[a],
                                         "edge");
      }
    }
  }
}

EdgeID Graph::find_arc(NodeID v, NodeID u) const {
  const auto begin = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
  const auto end = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
  const auto it = std::lower_bound(begin, end, u);
  if (it == end || *it != u) return num_arcs();
  return static_cast<EdgeID>(it - targets_.begin());
}

bool Graph::operator==(const Graph& other) const {
  return offsets_ == other.offsets_ && targets_ == other.targets_ &&
         node_weights_ == other.node_weights_ &&
         arc_weights_ == other.arc_weights_;
}

GraphBuilder::GraphBuilder(NodeID n) : node_weights_(n, 1), adjacency_(n) {}

void GraphBuilder::set_node_weight(NodeID v, Weight w) {
  node_weights_.at(v) = w;
}

void GraphBuilder::add_arc(NodeID from, NodeID to, Weight w) {
  if (from >= n() || to >= n()) {
    throw InputError("arc endpoint out of range");
  }
  if (from == to) return;
  adjacency_[from].emplace_back(to, w);
}

void GraphBuilder::add_edge(NodeID u, NodeID v, Weight w) {
  add_arc(u, v, w);
  add_arc(v, u, w);
}

Graph GraphBuilder::build() && {
  const NodeID num_nodes = n();
  std::vector<EdgeID> offsets(num_nodes + 1, 0);
  std::vector<NodeID> targets;
  std::vector<Weight> weights;
  for (NodeID v = 0; v < num_nodes; ++v) {
    auto& list = adjacency_[v];
    std::sort(list.begin(), list.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (i > 0 && list[i].first == list[i - 1].first) {
        weights.back() += list[i].second;
      } else {
        targets.push_back(list[i].first);
        weights.push_back(list[i].second);
      }
    }
    offsets[v + 1] = targets.size();
    list.clear();
    list.shrink_to_fit();
  }
  return Graph(std::move(offsets), std::move(targets), std::move(node_weights_),
               std::move(weights));
}

Graph induced_subgraph(const Graph& g, std::span<const NodeID> nodes,
                       bool unit_weights) {
  std::vector<NodeID> local(g.n(), kInvalidNode);
  for (NodeID i = 0; i < nodes.size(); ++i) local[nodes[i]] = i;

  std::vector<EdgeID> offsets(nodes.size() + 1, 0);
  std::vector<NodeID> targets;
  std::vector<Weight> arc_weights;
  std::vector<Weight> node_weights(nodes.size(), 1);
  for (NodeID i = 0; i < nodes.size(); ++i) {
    const NodeID v = nodes[i];
    if (!unit_weights) node_weights[i] = g.node_weight(v);
    std::vector<std::pair<NodeID, Weight>> row;
    g.for_each_neighbor(v, [&](NodeID u, Weight w) {
      if (local[u] != kInvalidNode) row.emplace_back(local[u], w);
    });
    std::sort(row.begin(), row.end());
    for (const auto& [u, w] : row) {
      targets.push_back(u);
      arc_weights.push_back(w);
    }
    offsets[i + 1] = targets.size();
  }
  return Graph(std::move(offsets), std::move(targets), std::move(node_weights),
               std::move(arc_weights));
}

}  // namespace mlgp
