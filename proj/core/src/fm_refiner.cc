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

#include <algorithm>
#include <queue>
#include <tuple>
#include <vector>

#include "mlgp/multilevel.h"
#include "mlgp/random.h"

namespace mlgp {

namespace {

struct Move {
  NodeID node;
  BlockID from;
};

struct Candidate {
  Weight gain = 0;
  BlockID target = kInvalidBlock;
  bool valid() const { return target != kInvalidBlock; }
};

class KWayFm {
 public:
  KWayFm(const Graph& g, Partition& p, Rng& rng)
      : g_(g),
        p_(p),
        rng_(rng),
        conn_(p.k(), 0),
        moved_(g.n(), 0),
        version_(g.n(), 0),
        slack_(g.max_node_weight()) {}

  // One pass; returns the cut reduction that was kept.
  Weight run_pass(std::uint64_t& moves_kept) {
    std::fill(moved_.begin(), moved_.end(), 0);
    queue_ = {};
    deferred_.clear();
    std::vector<Move> moves;

    for (const NodeID v : rng_.permutation(g_.n())) {
      if (is_boundary(v)) push(v);
    }

    Weight delta = 0;
    Weight best_delta = 0;
    std::size_t best_prefix = 0;
    const std::size_t patience = std::max<std::size_t>(100, g_.n() / 10);

    while (!queue_.empty()) {
      const auto [gain, tiebreak, v, version] = queue_.top();
      queue_.pop();
      if (moved_[v] || version != version_[v]) continue;

      const BlockID overloaded = overloaded_block();
      const Candidate c = best_move(v, overloaded);
      if (!c.valid()) {
        if (overloaded != kInvalidBlock) deferred_.push_back(v);
        continue;
      }
      if (c.gain != gain) {
        queue_.emplace(c.gain, tiebreak, v, version);
        continue;
      }

      const BlockID from = p_.block(v);
      p_.move(v, c.target, g_.node_weight(v));
      moved_[v] = 1;
      moves.push_back({v, from});
      delta -= c.gain;

      const bool balanced = p_.is_balanced();
      if (balanced && delta < best_delta) {
        best_delta = delta;
        best_prefix = moves.size();
      }
      if (moves.size() - best_prefix > patience) break;

      for (const NodeID u : g_.neighbors(v)) {
        if (!moved_[u]) push(u);
      }
      if (balanced && overloaded != kInvalidBlock) {
        for (const NodeID u : deferred_) {
          if (!moved_[u]) push(u);
        }
        deferred_.clear();
      }
    }

    while (moves.size() > best_prefix) {
      const Move m = moves.back();
      moves.pop_back();
      p_.move(m.node, m.from, g_.node_weight(m.node));
    }
    moves_kept += best_prefix;
    return -best_delta;
  }

 private:
  using Entry = std::tuple<Weight, std::uint64_t, NodeID, std::uint32_t>;

  bool is_boundary(NodeID v) const {
    for (const NodeID u : g_.neighbors(v)) {
      if (p_.block(u) != p_.block(v)) return true;
    }
    return false;
  }

  void push(NodeID v) {
    ++version_[v];
    const Candidate c = best_move(v, overloaded_block());
    if (c.valid()) queue_.emplace(c.gain, rng_.next(), v, version_[v]);
  }

  BlockID overloaded_block() const {
    for (BlockID b = 0; b < p_.k(); ++b) {
      if (p_.block_weight(b) > p_.lmax()) return b;
    }
    return kInvalidBlock;
  }

  // While a block is overloaded only moves out of it into blocks that stay
  // within L_max are allowed. Otherwise the target may exceed L_max by one
  // heaviest node so that swaps remain reachable at eps = 0.
  Candidate best_move(NodeID v, BlockID overloaded) {
    const BlockID own = p_.block(v);
    if (overloaded != kInvalidBlock && own != overloaded) return {};
    std::fill(conn_.begin(), conn_.end(), 0);
    g_.for_each_neighbor(v, [&](NodeID u, Weight w) { conn_[p_.block(u)] += w; });
    const Weight wv = g_.node_weight(v);
    const Weight limit = overloaded != kInvalidBlock ? p_.lmax() : p_.lmax() + slack_;
    Candidate best;
    for (BlockID t = 0; t < p_.k(); ++t) {
      if (t == own || p_.block_weight(t) + wv > limit) continue;
      if (overloaded == kInvalidBlock && conn_[t] == 0) continue;
      const Weight gain = conn_[t] - conn_[own];
      if (!best.valid() || gain > best.gain ||
          (gain == best.gain && p_.block_weight(t) < p_.block_weight(best.target))) {
        best = {gain, t};
      }
    }
    return best;
  }

  const Graph& g_;
  Partition& p_;
  Rng& rng_;
  std::vector<Weight> conn_;
  std::vector<char> moved_;
  std::vector<std::uint32_t> version_;
  std::vector<NodeID> deferred_;
  std::priority_queue<Entry> queue_;
  Weight slack_;
};

}  // namespace

Partition fm_refine(const Graph& g, Partition p, const PartitionConfig& config,
                    FmStats* stats) {
  if (!p.is_balanced()) {
    throw InputError("FM refinement needs a balanced partition");
  }
  FmStats local;
  if (p.k() > 1) {
    Rng rng(config.seed);
    KWayFm fm(g, p, rng);
    for (int pass = 0; pass < config.fm_max_passes; ++pass) {
      ++local.passes;
      if (fm.run_pass(local.moves_kept) == 0) break;
    }
  }
  if (stats) *stats = local;
  return p;
}

}  // namespace mlgp
