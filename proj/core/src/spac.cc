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

#include "mlgp/spac.h"

#include <algorithm>
#include <string>

namespace mlgp {

std::vector<std::pair<NodeID, NodeID>> canonical_edges(const Graph& g) {
  std::vector<std::pair<NodeID, NodeID>> edges;
  edges.reserve(g.m());
  for (NodeID u = 0; u < g.n(); ++u) {
    for (const NodeID v : g.neighbors(u)) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

SpacGraph build_spac(const Graph& g) {
  const EdgeID num_split = g.num_arcs();
  if (num_split >= kInvalidNode) throw InputError("graph too large for SPAC");
  const Weight dominant_weight = static_cast<Weight>(2 * g.m() + 1);

  std::vector<std::vector<std::pair<NodeID, Weight>>> adjacency(num_split);
  auto connect = [&](EdgeID a, EdgeID b, Weight w) {
    adjacency[a].emplace_back(static_cast<NodeID>(b), w);
    adjacency[b].emplace_back(static_cast<NodeID>(a), w);
  };

  SpacMapping mapping;
  mapping.dominant_weight = dominant_weight;
  mapping.split_begin.assign(g.offsets().begin(), g.offsets().end());
  for (NodeID v = 0; v < g.n(); ++v) {
    const EdgeID first = g.first_arc(v);
    const NodeID d = g.degree(v);
    if (d == 2) {
      connect(first, first + 1, 1);
    } else if (d >= 3) {
      for (NodeID i = 0; i < d; ++i) connect(first + i, first + (i + 1) % d, 1);
    }
  }
  for (NodeID u = 0; u < g.n(); ++u) {
    for (EdgeID a = g.first_arc(u); a < g.end_arc(u); ++a) {
      const NodeID v = g.arc_target(a);
      if (u > v) continue;
      const EdgeID back = g.find_arc(v, u);
      connect(a, back, dominant_weight);
      mapping.dominant.emplace_back(static_cast<NodeID>(a), static_cast<NodeID>(back));
    }
  }

  std::vector<EdgeID> offsets(num_split + 1, 0);
  std::vector<NodeID> targets;
  std::vector<Weight> weights;
  for (EdgeID s = 0; s < num_split; ++s) {
    auto& row = adjacency[s];
    std::sort(row.begin(), row.end());
    for (const auto& [t, w] : row) {
      targets.push_back(t);
      weights.push_back(w);
    }
    offsets[s + 1] = targets.size();
  }
  return {Graph(std::move(offsets), std::move(targets),
                std::vector<Weight>(num_split, 1), std::move(weights)),
          std::move(mapping)};
}

EdgePartition make_edge_partition(const Graph& g, BlockID k,
                                  std::vector<BlockID> edge_block) {
  if (edge_block.size() != g.m()) {
    throw InputError("edge partition has " + std::to_string(edge_block.size()) +
                     " entries but graph has " + std::to_string(g.m()) + " edges");
  }
  EdgePartition ep;
  ep.k = k;
  ep.block_edges.assign(k, 0);
  for (std::size_t e = 0; e < edge_block.size(); ++e) {
    if (edge_block[e] >= k) {
      throw InputError("edge " + std::to_string(e) + " assigned to block >= k");
    }
    ++ep.block_edges[edge_block[e]];
  }
  ep.edge_block = std::move(edge_block);
  return ep;
}

EdgePartition edge_partition(const Graph& g, const PartitionConfig& config) {
  config.validate();
  if (config.k > g.m()) {
    throw InfeasibleError("k = " + std::to_string(config.k) + " exceeds the " +
                          std::to_string(g.m()) + " edges of the graph");
  }
  const SpacGraph spac = build_spac(g);
  const Partition p = partition(spac.graph, config);

  std::vector<BlockID> edge_block(g.m());
  EdgeID cut = 0;
  for (std::size_t e = 0; e < spac.mapping.dominant.size(); ++e) {
    const auto [a, b] = spac.mapping.dominant[e];
    edge_block[e] = p.block(a);
    if (p.block(a) != p.block(b)) ++cut;
  }
  EdgePartition ep = make_edge_partition(g, config.k, std::move(edge_block));
  ep.dominant_edges_cut = cut;
  return ep;
}

EdgePartitionQuality eval_edge_partition(const Graph& g, const EdgePartition& ep) {
  if (ep.edge_block.size() != g.m()) {
    throw InputError("edge partition does not match the graph");
  }
  // Canonical edge index of every arc, so each vertex can see its edges.
  std::vector<EdgeID> arc_edge(g.num_arcs());
  EdgeID next = 0;
  for (NodeID u = 0; u < g.n(); ++u) {
    for (EdgeID a = g.first_arc(u); a < g.end_arc(u); ++a) {
      const NodeID v = g.arc_target(a);
      if (u < v) {
        arc_edge[a] = next;
        arc_edge[g.find_arc(v, u)] = next;
        ++next;
      }
    }
  }

  EdgePartitionQuality q;
  std::vector<NodeID> seen(ep.k, kInvalidNode);
  std::uint64_t replicas = 0;
  std::uint64_t vertices = 0;
  for (NodeID v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 0) continue;
    ++vertices;
    for (EdgeID a = g.first_arc(v); a < g.end_arc(v); ++a) {
      const BlockID b = ep.edge_block[arc_edge[a]];
      if (seen[b] != v) {
        seen[b] = v;
        ++replicas;
      }
    }
  }
  q.replication_factor =
      vertices == 0 ? 1.0 : static_cast<double>(replicas) / static_cast<double>(vertices);
  for (const EdgeID count : ep.block_edges) q.max_block_edges = std::max(q.max_block_edges, count);
  return q;
}

}  // namespace mlgp
