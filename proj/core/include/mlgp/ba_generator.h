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
#include <utility>
#include <vector>

#include "mlgp/graph.h"

namespace mlgp {

// Barabasi-Albert graph family. Conceptually the generator fills an edge
// array E where positions 2i and 2i+1 hold the endpoints of edge i, preceded
// by the optional seed-graph edges. Every entry is recomputed on demand from
// a keyed hash, so any edge can be produced without the others.
struct BaParams {
  std::uint64_t n = 0;
  std::uint64_t d = 1;
  std::uint64_t n0 = 0;
  // Flattened seed edge array (u0 v0 u1 v1 ...); occupies positions
  // 0..seed_edges.size()-1 of E.
  std::vector<std::uint64_t> seed_edges;
  std::uint64_t hash_seed = 0;

  // Throws InputError unless d >= 1, n >= n0, the seed array has even length
  // and only names nodes < n0.
  void validate() const;
  std::uint64_t num_edges() const { return d * (n - n0); }
};

using BaEdge = std::pair<std::uint64_t, std::uint64_t>;

// Uniform value in [0, bound) derived from (hash_seed, position) by an
// avalanche mixer with rejection sampling.
std::uint64_t ba_uniform(std::uint64_t hash_seed, std::uint64_t position,
                         std::uint64_t bound);

// Edge i, a pure function of (i, params). Throws InputError if i is out of
// range.
BaEdge ba_edge(std::uint64_t i, const BaParams& params);

// Edges lo..hi-1. With threads > 1 the range is split into chunks generated
// concurrently; the result does not depend on the thread count.
std::vector<BaEdge> ba_generate(const BaParams& params, std::uint64_t lo,
                                std::uint64_t hi, unsigned threads = 1);

// Drops self-loops and merges multi-edges (unit weights).
Graph simplify_edges(std::uint64_t n, const std::vector<BaEdge>& edges);

}  // namespace mlgp
