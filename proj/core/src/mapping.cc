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

#include "mlgp/mapping.h"

#include <algorithm>
#include <charconv>
#include <string>

#include "mlgp/random.h"

namespace mlgp {

HierarchySpec::HierarchySpec(std::vector<std::uint32_t> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw InputError("hierarchy needs at least one level");
  for (const auto a : factors_) {
    if (a < 1) throw InputError("hierarchy factors must be at least 1");
    if (num_pes_ > (std::uint64_t{1} << 40) / a) {
      throw InputError("hierarchy describes too many PEs");
    }
    num_pes_ *= a;
  }
}

HierarchySpec HierarchySpec::parse(std::string_view text) {
  std::vector<std::uint32_t> factors;
  while (true) {
    const std::size_t colon = text.find(':');
    const std::string_view token = text.substr(0, colon);
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw InputError("invalid hierarchy '" + std::string(text) +
                       "', expected a1:a2:...:ak");
    }
    factors.push_back(value);
    if (colon == std::string_view::npos) break;
    text.remove_prefix(colon + 1);
  }
  return HierarchySpec(std::move(factors));
}

std::uint32_t HierarchySpec::distance(std::uint64_t p, std::uint64_t q) const {
  std::uint32_t level = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (p % factors_[i] != q % factors_[i]) level = static_cast<std::uint32_t>(i + 1);
    p /= factors_[i];
    q /= factors_[i];
  }
  return level;
}

bool is_bijection(const ProcessMapping& mapping, std::uint64_t num_pes) {
  if (mapping.pe_of_task.size() != num_pes) return false;
  std::vector<char> used(num_pes, 0);
  for (const auto pe : mapping.pe_of_task) {
    if (pe >= num_pes || used[pe]) return false;
    used[pe] = 1;
  }
  return true;
}

namespace {

// Moves nodes out of oversized blocks until every block has exactly `size`
// nodes, choosing the least damaging move each time.
void enforce_exact_sizes(const Graph& g, std::vector<BlockID>& block, BlockID k,
                         NodeID size) {
  std::vector<NodeID> count(k, 0);
  for (const BlockID b : block) ++count[b];
  std::vector<Weight> conn(k, 0);
  for (;;) {
    const auto over = static_cast<BlockID>(
        std::max_element(count.begin(), count.end()) - count.begin());
    if (count[over] <= size) return;
    Weight best_gain = 0;
    NodeID best_node = kInvalidNode;
    BlockID best_target = kInvalidBlock;
    for (NodeID v = 0; v < g.n(); ++v) {
      if (block[v] != over) continue;
      std::fill(conn.begin(), conn.end(), 0);
      g.for_each_neighbor(v, [&](NodeID u, Weight w) { conn[block[u]] += w; });
      for (BlockID t = 0; t < k; ++t) {
        if (count[t] >= size) continue;
        const Weight gain = conn[t] - conn[over];
        if (best_node == kInvalidNode || gain > best_gain) {
          best_gain = gain;
          best_node = v;
          best_target = t;
        }
      }
    }
    block[best_node] = best_target;
    --count[over];
    ++count[best_target];
  }
}

void map_group(const Graph& comm, std::span<const NodeID> tasks,
               const HierarchySpec& spec, std::size_t level, std::uint64_t first_pe,
               const PartitionConfig& config, Rng& rng, ProcessMapping& out) {
  if (level == 0) {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      out.pe_of_task[tasks[i]] = static_cast<std::uint32_t>(first_pe + i);
    }
    return;
  }
  const BlockID parts = spec.factors()[level];
  const auto part_size = static_cast<NodeID>(tasks.size() / parts);
  std::vector<BlockID> block(tasks.size(), 0);
  if (parts > 1) {
    const Graph sub = induced_subgraph(comm, tasks, /*unit_weights=*/true);
    PartitionConfig part_config = config;
    part_config.k = parts;
    part_config.eps = 0.0;
    part_config.coarsen_stop = std::max(part_config.effective_coarsen_stop(), parts);
    part_config.seed = rng.next();
    const Partition p = partition(sub, part_config);
    block.assign(p.assignment().begin(), p.assignment().end());
    enforce_exact_sizes(sub, block, parts, part_size);
  }
  std::vector<std::vector<NodeID>> groups(parts);
  for (std::size_t i = 0; i < tasks.size(); ++i) groups[block[i]].push_back(tasks[i]);
  for (BlockID b = 0; b < parts; ++b) {
    map_group(comm, groups[b], spec, level - 1,
              first_pe + static_cast<std::uint64_t>(b) * part_size, config, rng, out);
  }
}

}  // namespace

ProcessMapping top_down_map(const Graph& comm, const HierarchySpec& spec,
                            const PartitionConfig& config) {
  if (comm.n() != spec.num_pes()) {
    throw InputError("communication graph has " + std::to_string(comm.n()) +
                     " tasks but the hierarchy has " + std::to_string(spec.num_pes()) +
                     " PEs");
  }
  ProcessMapping mapping;
  mapping.pe_of_task.assign(comm.n(), 0);
  std::vector<NodeID> tasks(comm.n());
  for (NodeID v = 0; v < comm.n(); ++v) tasks[v] = v;
  Rng rng(config.seed);
  map_group(comm, tasks, spec, spec.num_levels() - 1, 0, config, rng, mapping);
  return mapping;
}

Weight comm_cost(const Graph& comm, const ProcessMapping& mapping,
                 const HierarchySpec& spec) {
  if (mapping.pe_of_task.size() != comm.n()) {
    throw InputError("mapping does not match the communication graph");
  }
  Weight cost = 0;
  for (NodeID u = 0; u < comm.n(); ++u) {
    comm.for_each_neighbor(u, [&](NodeID v, Weight w) {
      if (u < v) {
        cost += w * spec.distance(mapping.pe_of_task[u], mapping.pe_of_task[v]);
      }
    });
  }
  return cost;
}

}  // namespace mlgp
