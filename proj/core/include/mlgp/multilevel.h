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
#include <span>

#include "mlgp/graph.h"
#include "mlgp/label_propagation.h"
#include "mlgp/partition.h"

namespace mlgp {

struct PartitionConfig {
  BlockID k = 2;
  double eps = 0.03;
  // Coarsening stops once a level has at most this many nodes. 0 selects the
  // default of 20 * k.
  NodeID coarsen_stop = 0;
  // Cluster size bound during coarsening is L_max / cluster_bound_factor.
  double cluster_bound_factor = 2.0;
  int rounds = 3;
  int init_attempts = 10;
  int fm_max_passes = 10;
  NodeOrder order = NodeOrder::kRandom;
  std::uint64_t seed = 0;

  NodeID effective_coarsen_stop() const {
    return coarsen_stop == 0 ? 20 * k : coarsen_stop;
  }
  // Throws InputError when an invariant (k >= 1, eps >= 0,
  // coarsen_stop >= k, ...) is violated.
  void validate() const;
};

// Label propagation clustering plus contraction until the graph has at most
// coarsen_stop nodes or a level shrinks by less than 5%. A level that does not
// shrink at all is discarded. With non-empty `regions`, clusters never span
// two regions.
Hierarchy coarsen(const Graph& g, const PartitionConfig& config,
                  std::span<const NodeID> regions = {});

// Moves nodes out of overweight blocks, always choosing the move with the
// smallest cut increase among those whose target block stays within L_max.
// Returns false if some block stays overweight.
bool repair_balance(const Graph& g, Partition& p);

// Portfolio of random, BFS-growing and greedy-growing starts, each repaired
// and FM-refined; returns the balanced candidate of least cut. Throws
// InfeasibleError when no candidate can be balanced.
Partition initial_partition(const Graph& g, const PartitionConfig& config);

struct FmStats {
  int passes = 0;
  std::uint64_t moves_kept = 0;
};

// k-way boundary Fiduccia-Mattheyses. Each pass moves every node at most once
// and rolls back to the best balanced prefix. A move may overload its target
// by at most one heaviest node; while a block is overloaded only moves out of
// it are taken. Output cut <= input cut; balance is preserved.
Partition fm_refine(const Graph& g, Partition p, const PartitionConfig& config,
                    FmStats* stats = nullptr);

struct MultilevelTrace {
  // Per level from coarsest to finest: cut after projection and after
  // refinement.
  std::vector<Weight> projected_cut;
  std::vector<Weight> refined_cut;
  std::size_t initial_level = 0;
};

Partition partition(const Graph& g, const PartitionConfig& config,
                    MultilevelTrace* trace = nullptr);

// Multilevel recombination: no edge cut by either parent is contracted, the
// better parent is applied on the coarsest level and refined on the way up.
// Result cut <= min(cut(p1), cut(p2)).
Partition combine(const Graph& g, const Partition& p1, const Partition& p2,
                  const PartitionConfig& config);

}  // namespace mlgp
