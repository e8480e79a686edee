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
#include <limits>
#include <stdexcept>
#include <string>

namespace mlgp {

using NodeID = std::uint32_t;
using EdgeID = std::uint64_t;
using BlockID = std::uint32_t;
// Node and edge weights share one signed type so that gains and differences
// never need casts. Totals are validated against kMaxTotalWeight at load.
using Weight = std::int64_t;

inline constexpr NodeID kInvalidNode = std::numeric_limits<NodeID>::max();
inline constexpr BlockID kInvalidBlock = std::numeric_limits<BlockID>::max();
inline constexpr Weight kMaxTotalWeight = std::numeric_limits<Weight>::max() / 4;

// Malformed input: bad file contents, bad flags, violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input for which no balanced solution exists.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mlgp
