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

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "mlgp/graph.h"

namespace mlgp {

// METIS text format: header `n m [fmt]`, then one 1-indexed adjacency line
// per node. fmt 1 = edge weights, 10 = node weights, 11 = both. Lines
// starting with '%' are comments. Parallel arcs are merged by summing their
// weights and self-loops are dropped. Errors carry the offending line number.
Graph read_metis(std::istream& in);
Graph load_metis(const std::filesystem::path& path);

// Emits fmt only when some weight differs from 1, so that reading the output
// reproduces `g` exactly.
void write_metis(std::ostream& out, const Graph& g);
void save_metis(const std::filesystem::path& path, const Graph& g);

// One non-negative integer per line; line i holds the label of node i.
// Labels must be < num_labels and there must be exactly `expected` lines.
std::vector<std::uint32_t> read_label_file(const std::filesystem::path& path,
                                           std::size_t expected,
                                           std::uint32_t num_labels);
void write_label_file(const std::filesystem::path& path,
                      std::span<const std::uint32_t> labels);
void write_labels(std::ostream& out, std::span<const std::uint32_t> labels);

}  // namespace mlgp
