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

#include <cstdint>
#include <functional>
#include <span>

#include "mlgp/graph.h"
#include "mlgp/partition.h"

namespace mlgp {

enum class NodeOrder { kRandom, kAscendingDegree };

struct LabelPropagationOptions {
  int rounds = 3;
  NodeOrder order = NodeOrder::kRandom;
  std::uint64_t seed = 0;
  // Test hook, invoked after every move with (node, old label, new label).
  std::function<void(NodeID, std::uint32_t, std::uint32_t)> on_move;
};

struct LabelPropagationStats {
  int rounds_run = 0;
  std::uint64_t moves = 0;
};

// Size-constrained label propagation clustering. Starts from singletons; in
// every round each node joins the neighboring cluster with the strongest
// connection among those that stay within size_bound after the move. Labels
// are updated in place, so later nodes of a round see earlier moves.
//
// If `regions` is non-empty, a node only considers neighbors in its own
// region, so every cluster stays inside one region.
Clustering sclap_cluster(const Graph& g, Weight size_bound,
                         const LabelPropagationOptions& options,
                         std::span<const NodeID> regions = {},
                         LabelPropagationStats* stats = nullptr);

// Label propagation as k-way refinement: a node moves only to a block with
// strictly stronger connection than its own and only if the target stays
// within L_max. Never increases the cut. Throws InputError on an unbalanced
// input partition.
Partition sclap_refine(const Graph& g, Partition p,
                       const LabelPropagationOptions& options,
                       LabelPropagationStats* stats = nullptr);

}  // namespace mlgp
