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

#include <vector>

#include "mlgp/graph.h"
#include "mlgp/multilevel.h"

namespace mlgp {

// Split node ids of G' coincide with arc ids of G: the i-th split node of v
// is arc g.first_arc(v) + i and owns v's i-th incident edge.
struct SpacMapping {
  // split_begin[v] .. split_begin[v + 1] are the split nodes of v.
  std::vector<EdgeID> split_begin;
  // Per canonical edge (u < v, lexicographic): its dominant pair, lower split
  // node first.
  std::vector<std::pair<NodeID, NodeID>> dominant;
  Weight dominant_weight = 0;
};

struct SpacGraph {
  Graph graph;
  SpacMapping mapping;
};

// Split-and-connect graph: split nodes of each vertex joined in a cycle of
// unit auxiliary edges (a single edge for degree 2, none for degree 1), and
// one dominant edge of weight 2m + 1 per original edge.
SpacGraph build_spac(const Graph& g);

// Canonical edge order: (u, v) with u < v, sorted lexicographically.
std::vector<std::pair<NodeID, NodeID>> canonical_edges(const Graph& g);

struct EdgePartition {
  BlockID k = 1;
  std::vector<BlockID> edge_block;  // canonical edge order
  std::vector<EdgeID> block_edges;
  // Number of dominant edges of G' whose endpoints landed in different blocks.
  EdgeID dominant_edges_cut = 0;
};

EdgePartition make_edge_partition(const Graph& g, BlockID k,
                                  std::vector<BlockID> edge_block);

// Node-partitions G' with the multilevel partitioner and gives every edge the
// block of the lower split node of its dominant edge. Throws InfeasibleError
// if k > m.
EdgePartition edge_partition(const Graph& g, const PartitionConfig& config);

struct EdgePartitionQuality {
  double replication_factor = 1.0;
  EdgeID max_block_edges = 0;
};

// Replication factor averages, over non-isolated vertices, the number of
// distinct blocks among incident edges.
EdgePartitionQuality eval_edge_partition(const Graph& g, const EdgePartition& ep);

}  // namespace mlgp
