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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include "mlgp/types.h"

namespace mlgp {

// SplitMix64 finalizer. Used for seeding and as the keyed hash of the
// Barabasi-Albert generator.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic generator with cheap stream splitting. All randomness in the
// library flows from a single user seed through split().
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed), engine_(mix64(seed)) {}

  std::uint64_t next() { return engine_(); }

  // Independent child stream; advances this stream by one draw.
  Rng split() { return Rng(mix64(next() ^ 0x5851f42d4c957f2dULL)); }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  bool coin() { return (next() >> 63) != 0; }

  template <typename T>
  void shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[below(i)]);
    }
  }

  std::vector<NodeID> permutation(NodeID n) {
    std::vector<NodeID> perm(n);
    std::iota(perm.begin(), perm.end(), NodeID{0});
    shuffle(std::span<NodeID>(perm));
    return perm;
  }

  std::uint64_t seed() const { return state_; }

 private:
  std::uint64_t state_;
  std::mt19937_64 engine_;
};

}  // namespace mlgp
