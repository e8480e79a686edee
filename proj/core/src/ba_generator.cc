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

#include "mlgp/ba_generator.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

#include "mlgp/random.h"

namespace mlgp {

void BaParams::validate() const {
  if (d < 1) throw InputError("d must be at least 1");
  if (n < n0) throw InputError("n must be at least n0");
  if (seed_edges.size() % 2 != 0) {
    throw InputError("seed edge array must have even length");
  }
  for (const auto v : seed_edges) {
    if (v >= n0) throw InputError("seed edge names node outside the seed graph");
  }
  if (n - n0 > 0 && d > (std::uint64_t{1} << 62) / (n - n0)) {
    throw InputError("edge count overflows");
  }
}

std::uint64_t ba_uniform(std::uint64_t hash_seed, std::uint64_t position,
                         std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  const std::uint64_t key = mix64(hash_seed ^ 0x243f6a8885a308d3ULL);
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t r = mix64(key ^ mix64(position) ^ (attempt * 0x9e3779b97f4a7c15ULL));
    if (r >= threshold) return r % bound;
  }
}

BaEdge ba_edge(std::uint64_t i, const BaParams& params) {
  if (i >= params.num_edges()) {
    throw InputError("edge index " + std::to_string(i) + " out of range [0, " +
                     std::to_string(params.num_edges()) + ")");
  }
  const std::uint64_t prefix = params.seed_edges.size();
  const std::uint64_t source = params.n0 + i / params.d;

  // Resolve E[prefix + 2i + 1]. Each step jumps to a strictly smaller target
  // position; even generated positions and seed positions are known directly.
  std::uint64_t position = prefix + 2 * i + 1;
  const std::uint64_t step_cap = 2 * i + 2;
  for (std::uint64_t step = 0; step <= step_cap; ++step) {
    const std::uint64_t x = ba_uniform(params.hash_seed, position, position);
    if (x < prefix) return {source, params.seed_edges[x]};
    const std::uint64_t offset = x - prefix;
    if (offset % 2 == 0) return {source, params.n0 + (offset / 2) / params.d};
    position = x;
  }
  throw std::logic_error("edge resolution chain exceeded its step bound");
}

std::vector<BaEdge> ba_generate(const BaParams& params, std::uint64_t lo,
                                std::uint64_t hi, unsigned threads) {
  params.validate();
  if (lo > hi || hi > params.num_edges()) {
    throw InputError("invalid edge range [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + ")");
  }
  std::vector<BaEdge> edges(hi - lo);
  auto fill = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) edges[i - lo] = ba_edge(i, params);
  };
  threads = std::max(1U, threads);
  if (threads == 1 || hi - lo < 2 * threads) {
    fill(lo, hi);
    return edges;
  }
  {
    std::vector<std::jthread> workers;
    const std::uint64_t chunk = (hi - lo + threads - 1) / threads;
    for (std::uint64_t begin = lo; begin < hi; begin += chunk) {
      workers.emplace_back(fill, begin, std::min(hi, begin + chunk));
    }
  }
  return edges;
}

Graph simplify_edges(std::uint64_t n, const std::vector<BaEdge>& edges) {
  if (n >= kInvalidNode) throw InputError("too many nodes for a simple graph");
  GraphBuilder builder(static_cast<NodeID>(n));
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw InputError("edge endpoint out of range");
    if (u == v) continue;
    builder.add_edge(static_cast<NodeID>(u), static_cast<NodeID>(v), 1);
  }
  // Multi-edges were summed by the builder; reset to unit weight.
  Graph summed = std::move(builder).build();
  return Graph(std::vector<EdgeID>(summed.offsets().begin(), summed.offsets().end()),
               std::vector<NodeID>(summed.targets().begin(), summed.targets().end()),
               std::vector<Weight>(summed.n(), 1),
               std::vector<Weight>(summed.num_arcs(), 1));
}

}  // namespace mlgp
