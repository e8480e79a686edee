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
#include <string_view>
#include <vector>

#include "mlgp/graph.h"
#include "mlgp/multilevel.h"

namespace mlgp {

// Homogeneous machine hierarchy a_1:a_2:...:a_k (cores per processor,
// processors per node, ...). PE ids are mixed-radix numbers with a_1 as the
// least significant digit.
class HierarchySpec {
 public:
  HierarchySpec() = default;
  explicit HierarchySpec(std::vector<std::uint32_t> factors);

  // Parses "a1:a2:...:ak".
  static HierarchySpec parse(std::string_view text);

  std::span<const std::uint32_t> factors() const { return factors_; }
  std::size_t num_levels() const { return factors_.size(); }
  std::uint64_t num_pes() const { return num_pes_; }

  // 1-based index of the most significant differing digit, 0 if p == q.
  std::uint32_t distance(std::uint64_t p, std::uint64_t q) const;

 private:
  std::vector<std::uint32_t> factors_;
  std::uint64_t num_pes_ = 1;
};

struct ProcessMapping {
  std::vector<std::uint32_t> pe_of_task;
};

bool is_bijection(const ProcessMapping& mapping, std::uint64_t num_pes);

// Recursively splits the communication graph into perfectly balanced parts
// along the hierarchy, top level first; leaf groups of a_1 tasks take
// consecutive PE ids in task order. Throws InputError if n != prod(a_i).
ProcessMapping top_down_map(const Graph& comm, const HierarchySpec& spec,
                            const PartitionConfig& config);

// Sum over edges of w(u, v) * distance(pe(u), pe(v)).
Weight comm_cost(const Graph& comm, const ProcessMapping& mapping,
                 const HierarchySpec& spec);

}  // namespace mlgp
