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

#include "mlgp/multilevel.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "mlgp/random.h"

namespace mlgp {

void PartitionConfig::validate() const {
  if (k < 1) throw InputError("k must be at least 1");
  if (!(eps >= 0.0)) throw InputError("eps must be non-negative");
  if (effective_coarsen_stop() < k) {
    throw InputError("coarsen_stop must be at least k");
  }
  if (!(cluster_bound_factor >= 1.0)) {
    throw InputError("cluster_bound_factor must be at least 1");
  }
  if (rounds < 1) throw InputError("rounds must be at least 1");
  if (init_attempts < 1) throw InputError("init_attempts must be at least 1");
  if (fm_max_passes < 0) throw InputError("fm_max_passes must be non-negative");
}

Hierarchy coarsen(const Graph& g, const PartitionConfig& config,
                  std::span<const NodeID> regions) {
  config.validate();
  Hierarchy h;
  h.levels.push_back(g);
  std::vector<NodeID> level_regions(regions.begin(), regions.end());

  const Weight lmax = max_block_weight(g.total_node_weight(), config.k, config.eps);
  const Weight bound = std::max<Weight>(
      static_cast<Weight>(std::floor(static_cast<double>(lmax) /
                                     config.cluster_bound_factor)),
      g.max_node_weight());
  const NodeID stop = config.effective_coarsen_stop();
  Rng rng(config.seed);

  while (h.levels.back().n() > stop) {
    const Graph& current = h.levels.back();
    LabelPropagationOptions options;
    options.rounds = config.rounds;
    options.order = config.order;
    options.seed = rng.next();
    const Clustering clustering =
        sclap_cluster(current, bound, options, level_regions);
    if (clustering.num_clusters == current.n()) break;

    Contraction contraction = contract(current, clustering);
    if (!level_regions.empty()) {
      std::vector<NodeID> coarse_regions(contraction.coarse.n());
      for (NodeID v = 0; v < current.n(); ++v) {
        coarse_regions[contraction.coarse_map[v]] = level_regions[v];
      }
      level_regions = std::move(coarse_regions);
    }
    const NodeID before = current.n();
    h.levels.push_back(std::move(contraction.coarse));
    h.maps.push_back(std::move(contraction.coarse_map));
    if (static_cast<double>(h.levels.back().n()) > 0.95 * before) break;
  }
  return h;
}

namespace {

Partition refine_level(const Graph& g, Partition p, const PartitionConfig& config,
                       Rng& rng) {
  LabelPropagationOptions options;
  options.rounds = config.rounds;
  options.order = config.order;
  options.seed = rng.next();
  p = sclap_refine(g, std::move(p), options);
  PartitionConfig fm_config = config;
  fm_config.seed = rng.next();
  return fm_refine(g, std::move(p), fm_config);
}

Partition uncoarsen(const Hierarchy& h, Partition p, std::size_t level,
                    const PartitionConfig& config, Rng& rng,
                    MultilevelTrace* trace) {
  while (level > 0) {
    --level;
    p = project_partition(p, h.maps[level]);
    const Graph& g = h.levels[level];
    if (trace) trace->projected_cut.push_back(cut_value(g, p));
    p = refine_level(g, std::move(p), config, rng);
    if (trace) trace->refined_cut.push_back(cut_value(g, p));
  }
  return p;
}

}  // namespace

Partition partition(const Graph& g, const PartitionConfig& config,
                    MultilevelTrace* trace) {
  config.validate();
  const Weight lmax = max_block_weight(g.total_node_weight(), config.k, config.eps);
  if (g.max_node_weight() > lmax) {
    throw InfeasibleError("node weight " + std::to_string(g.max_node_weight()) +
                          " exceeds the block bound " + std::to_string(lmax));
  }
  if (config.k == 1) return Partition::single_block(g, 1, config.eps);

  Rng rng(config.seed);
  PartitionConfig level_config = config;
  level_config.seed = rng.next();
  const Hierarchy h = coarsen(g, level_config);

  // A coarse level may admit no balanced partition (bin packing); fall back
  // to finer levels until one does.
  std::size_t level = h.num_levels() - 1;
  Partition p;
  for (;;) {
    level_config.seed = rng.next();
    try {
      p = initial_partition(h.levels[level], level_config);
      break;
    } catch (const InfeasibleError&) {
      if (level == 0) throw;
      --level;
    }
  }
  if (trace) trace->initial_level = level;
  return uncoarsen(h, std::move(p), level, config, rng, trace);
}

Partition combine(const Graph& g, const Partition& p1, const Partition& p2,
                  const PartitionConfig& config) {
  config.validate();
  for (const Partition* parent : {&p1, &p2}) {
    if (parent->n() != g.n() || parent->k() != config.k) {
      throw InputError("parent partition does not match graph or k");
    }
    const Partition check(g, config.k, config.eps,
                          {parent->assignment().begin(), parent->assignment().end()});
    if (!check.is_balanced() ||
        !std::ranges::equal(check.block_weights(), parent->block_weights())) {
      throw InputError("parent partition is not balanced");
    }
  }

  // Overlay of both parents: an edge is cut by p1 or p2 iff its endpoints lie
  // in different overlay regions, so clusters confined to regions never
  // contract such an edge.
  std::vector<NodeID> regions(g.n());
  for (NodeID v = 0; v < g.n(); ++v) {
    regions[v] = p1.block(v) * config.k + p2.block(v);
  }

  Rng rng(config.seed);
  PartitionConfig level_config = config;
  level_config.seed = rng.next();
  const Hierarchy h = coarsen(g, level_config, regions);

  // Push each parent down to the coarsest level.
  const Graph& coarsest = h.coarsest();
  auto restrict_to_coarsest = [&](const Partition& parent) {
    std::vector<NodeID> to_coarse(g.n());
    for (NodeID v = 0; v < g.n(); ++v) to_coarse[v] = v;
    for (const auto& map : h.maps) {
      for (auto& c : to_coarse) c = map[c];
    }
    std::vector<BlockID> coarse(coarsest.n(), 0);
    for (NodeID v = 0; v < g.n(); ++v) coarse[to_coarse[v]] = parent.block(v);
    return Partition(coarsest, config.k, config.eps, std::move(coarse));
  };
  Partition q1 = restrict_to_coarsest(p1);
  Partition q2 = restrict_to_coarsest(p2);
  Partition p = cut_value(coarsest, q2) < cut_value(coarsest, q1) ? std::move(q2)
                                                                  : std::move(q1);
  p = refine_level(coarsest, std::move(p), config, rng);
  return uncoarsen(h, std::move(p), h.num_levels() - 1, config, rng, nullptr);
}

}  // namespace mlgp
