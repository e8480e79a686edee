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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mlgp/graph.h"
#include "mlgp/multilevel.h"
#include "mlgp/partition.h"

namespace mlgp {

enum class Side : std::uint8_t { kV1 = 0, kV2 = 1, kSeparator = 2 };

// Labels every node V1, V2 or S. Valid when no edge joins V1 and V2.
class Separator {
 public:
  Separator() = default;
  Separator(const Graph& g, std::vector<Side> labels);

  Side side(NodeID v) const { return labels_[v]; }
  std::span<const Side> labels() const { return labels_; }
  Weight weight(Side s) const { return weights_[static_cast<int>(s)]; }
  Weight separator_weight() const { return weight(Side::kSeparator); }
  NodeID n() const { return static_cast<NodeID>(labels_.size()); }

  std::vector<NodeID> separator_nodes() const;

  void set(NodeID v, Side s, Weight node_weight) {
    weights_[static_cast<int>(labels_[v])] -= node_weight;
    weights_[static_cast<int>(s)] += node_weight;
    labels_[v] = s;
  }

  bool operator==(const Separator& other) const = default;

 private:
  std::vector<Side> labels_;
  std::array<Weight, 3> weights_{0, 0, 0};
};

// (1 + eps) * ceil(c(V) / 2).
inline Weight separator_side_bound(const Graph& g, double eps) {
  return max_block_weight(g.total_node_weight(), 2, eps);
}

// No V1-V2 edge (full edge scan).
bool is_valid_separator(const Graph& g, const Separator& s);
bool is_balanced_separator(const Graph& g, const Separator& s, double eps);

// S is the lighter of the two boundary sides of a bisection (ties go to the
// block 0 boundary).
Separator derive_separator(const Graph& g, const Partition& bisection);

// Separator FM with two gain queues, one per target side. Moving v from S to
// V1 pulls N(v) cap V2 into S; its gain is c(v) minus the weight pulled in.
// Each node leaves S at most once per search and the search is rolled back
// to the prefix with the lightest separator. Moves must keep both sides
// within the balance bound and non-empty.
//
// subset_size == 0 seeds the queues with all of S and repeats searches until
// one fails to improve. Otherwise each round runs `restarts` searches seeded
// with fresh random subsets of that size; rounds repeat while they improve.
struct SeparatorFmOptions {
  std::size_t subset_size = 0;
  int restarts = 5;
  int max_rounds = 20;
  std::uint64_t seed = 0;
};
Separator fm_separator_refine(const Graph& g, Separator sep, double eps,
                              const SeparatorFmOptions& options);

// Node-capacitated s-t flow problem on a region A around the separator.
// Local node i of the region is global node `nodes[i]`.
struct FlowNetwork {
  std::vector<NodeID> nodes;
  std::vector<Weight> capacity;
  // Undirected edges of G[A] in local ids; arcs carry `infinity` both ways.
  std::vector<std::pair<NodeID, NodeID>> edges;
  std::vector<NodeID> source_side;  // local ids connected from s
  std::vector<NodeID> sink_side;    // local ids connected to t
  Weight infinity = 0;
};

// Grows A from S by two breadth-first searches, one into each side. Whole
// BFS layers are added while c(A cap V_i) <= bound - c(V_other) - c(S), so any
// vertex cut of the network leaves both sides within the bound. s feeds the
// outermost V1 layer (or the S nodes adjacent to V1 when no layer fits); the
// sink side is symmetric. Returns nullopt when S is empty.
std::optional<FlowNetwork> build_flow_problem(const Graph& g, const Separator& sep,
                                              double eps);

struct VertexCut {
  Weight flow_value = 0;
  // Local ids. Closest to the source and closest to the sink, respectively.
  std::vector<NodeID> source_cut;
  std::vector<NodeID> sink_cut;
};

// Max flow by node splitting (in/out copies joined by an arc of the node
// capacity) and Dinic's algorithm.
VertexCut node_capacitated_maxflow(const FlowNetwork& network);

// Replaces S with a minimum vertex cut of the flow problem when that is
// lighter, or equally light with better balance.
Separator flow_refine(const Graph& g, Separator sep, double eps);

// coarsen -> bisect coarsest -> derive separator -> per level: project,
// FM (all), localized FM, flow refinement.
Separator multilevel_separator(const Graph& g, double eps,
                               const PartitionConfig& config);

}  // namespace mlgp
