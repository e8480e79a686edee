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

#include "mlgp/separator.h"

#include <algorithm>
#include <array>
#include <optional>
#include <queue>
#include <string>
#include <tuple>

#include "mlgp/random.h"

namespace mlgp {

Separator::Separator(const Graph& g, std::vector<Side> labels)
    : labels_(std::move(labels)) {
  if (labels_.size() != g.n()) {
    throw InputError("separator has " + std::to_string(labels_.size()) +
                     " labels but graph has " + std::to_string(g.n()) + " nodes");
  }
  for (NodeID v = 0; v < g.n(); ++v) {
    const auto s = static_cast<int>(labels_[v]);
    if (s > 2) throw InputError("invalid separator label at node " + std::to_string(v));
    weights_[s] += g.node_weight(v);
  }
}

std::vector<NodeID> Separator::separator_nodes() const {
  std::vector<NodeID> nodes;
  for (NodeID v = 0; v < n(); ++v) {
    if (labels_[v] == Side::kSeparator) nodes.push_back(v);
  }
  return nodes;
}

bool is_valid_separator(const Graph& g, const Separator& s) {
  for (NodeID v = 0; v < g.n(); ++v) {
    if (s.side(v) != Side::kV1) continue;
    for (const NodeID u : g.neighbors(v)) {
      if (s.side(u) == Side::kV2) return false;
    }
  }
  return true;
}

bool is_balanced_separator(const Graph& g, const Separator& s, double eps) {
  const Weight bound = separator_side_bound(g, eps);
  return s.weight(Side::kV1) <= bound && s.weight(Side::kV2) <= bound;
}

Separator derive_separator(const Graph& g, const Partition& bisection) {
  if (bisection.k() != 2 || bisection.n() != g.n()) {
    throw InputError("separator derivation needs a bisection of the graph");
  }
  Weight boundary_weight[2] = {0, 0};
  std::vector<char> boundary(g.n(), 0);
  for (NodeID v = 0; v < g.n(); ++v) {
    for (const NodeID u : g.neighbors(v)) {
      if (bisection.block(u) != bisection.block(v)) {
        boundary[v] = 1;
        boundary_weight[bisection.block(v)] += g.node_weight(v);
        break;
      }
    }
  }
  const BlockID chosen = boundary_weight[1] < boundary_weight[0] ? 1 : 0;
  std::vector<Side> labels(g.n());
  for (NodeID v = 0; v < g.n(); ++v) {
    if (boundary[v] && bisection.block(v) == chosen) {
      labels[v] = Side::kSeparator;
    } else {
      labels[v] = bisection.block(v) == 0 ? Side::kV1 : Side::kV2;
    }
  }
  return Separator(g, std::move(labels));
}

namespace {

Side opposite(Side s) { return s == Side::kV1 ? Side::kV2 : Side::kV1; }

class SeparatorFm {
 public:
  SeparatorFm(const Graph& g, Separator& sep, double eps, Rng& rng)
      : g_(g),
        sep_(sep),
        rng_(rng),
        bound_(separator_side_bound(g, eps)),
        moved_(g.n(), 0),
        eligible_(g.n(), 0),
        version_(g.n(), 0),
        conn_(g.n(), {0, 0}) {
    for (NodeID v = 0; v < g.n(); ++v) {
      const Side s = sep_.side(v);
      if (s == Side::kSeparator) continue;
      for (const NodeID u : g.neighbors(v)) conn_[u][index(s)] += g.node_weight(v);
    }
  }

  // Returns true if the separator got lighter.
  bool search(std::span<const NodeID> seeds) {
    for (const NodeID v : touched_) {
      moved_[v] = 0;
      eligible_[v] = 0;
    }
    touched_.clear();
    queues_[0] = {};
    queues_[1] = {};
    std::vector<std::pair<NodeID, Side>> undo;

    for (const NodeID v : seeds) make_eligible(v);

    const Weight start = sep_.separator_weight();
    Weight best = start;
    std::size_t best_prefix = 0;
    const std::size_t patience = std::max<std::size_t>(100, g_.n() / 10);
    std::size_t since_best = 0;

    for (;;) {
      const auto top1 = feasible_top(Side::kV1);
      const auto top2 = feasible_top(Side::kV2);
      if (!top1 && !top2) break;
      Side target;
      if (top1 && top2) {
        if (top1->first != top2->first) {
          target = top1->first > top2->first ? Side::kV1 : Side::kV2;
        } else {
          target = rng_.coin() ? Side::kV1 : Side::kV2;
        }
      } else {
        target = top1 ? Side::kV1 : Side::kV2;
      }
      const NodeID v = target == Side::kV1 ? top1->second : top2->second;
      const Side pulled_side = opposite(target);

      moved_[v] = 1;
      undo.emplace_back(v, Side::kSeparator);
      relabel(v, target);
      std::vector<NodeID> pulled;
      for (const NodeID u : g_.neighbors(v)) {
        if (sep_.side(u) == pulled_side) {
          undo.emplace_back(u, pulled_side);
          relabel(u, Side::kSeparator);
          pulled.push_back(u);
        }
      }
      for (const NodeID u : pulled) make_eligible(u);
      update_around(v);
      for (const NodeID u : pulled) update_around(u);

      if (sep_.separator_weight() < best) {
        best = sep_.separator_weight();
        best_prefix = undo.size();
        since_best = 0;
      } else if (++since_best > patience) {
        break;
      }
    }

    while (undo.size() > best_prefix) {
      const auto [v, side] = undo.back();
      undo.pop_back();
      relabel(v, side);
    }
    return best < start;
  }

 private:
  using Entry = std::tuple<Weight, std::uint64_t, NodeID, std::uint32_t>;

  static int index(Side s) { return static_cast<int>(s); }

  void relabel(NodeID v, Side s) {
    const Side old = sep_.side(v);
    if (old == s) return;
    const Weight w = g_.node_weight(v);
    for (const NodeID u : g_.neighbors(v)) {
      if (old != Side::kSeparator) conn_[u][index(old)] -= w;
      if (s != Side::kSeparator) conn_[u][index(s)] += w;
    }
    sep_.set(v, s, w);
  }

  // Gain of moving separator node v into `side`: its weight minus the
  // weight pulled in from the opposite side.
  Weight gain(NodeID v, Side side) const {
    return g_.node_weight(v) - conn_[v][index(opposite(side))];
  }

  bool fits(NodeID v, Side side) const {
    return sep_.weight(side) + g_.node_weight(v) <= bound_;
  }

  bool keeps_other_side(NodeID v, Side side) const {
    const Side other = opposite(side);
    return sep_.weight(other) - conn_[v][index(other)] > 0;
  }

  void make_eligible(NodeID v) {
    if (moved_[v]) return;
    if (!eligible_[v]) touched_.push_back(v);
    eligible_[v] = 1;
    push(v);
  }

  void push(NodeID v) {
    ++version_[v];
    for (const Side side : {Side::kV1, Side::kV2}) {
      queues_[index(side)].emplace(gain(v, side), rng_.next(), v, version_[v]);
    }
  }

  void update_around(NodeID v) {
    for (const NodeID u : g_.neighbors(v)) {
      if (eligible_[u] && !moved_[u] && sep_.side(u) == Side::kSeparator) push(u);
    }
  }

  bool live(NodeID v, std::uint32_t version) const {
    return !moved_[v] && version == version_[v] && sep_.side(v) == Side::kSeparator;
  }

  // Drops stale entries. A top entry that would overload the target side
  // stays queued and blocks that side until it loses weight.
  std::optional<std::pair<Weight, NodeID>> feasible_top(Side side) {
    auto& queue = queues_[index(side)];
    while (!queue.empty()) {
      const auto [g, tiebreak, v, version] = queue.top();
      if (!live(v, version)) {
        queue.pop();
        continue;
      }
      if (!fits(v, side)) return std::nullopt;
      if (!keeps_other_side(v, side)) {
        queue.pop();
        continue;
      }
      return std::make_pair(g, v);
    }
    return std::nullopt;
  }

  const Graph& g_;
  Separator& sep_;
  Rng& rng_;
  Weight bound_;
  std::vector<char> moved_;
  std::vector<char> eligible_;
  std::vector<std::uint32_t> version_;
  std::vector<std::array<Weight, 2>> conn_;
  std::vector<NodeID> touched_;
  std::priority_queue<Entry> queues_[2];
};

}  // namespace

Separator fm_separator_refine(const Graph& g, Separator sep, double eps,
                              const SeparatorFmOptions& options) {
  Rng rng(options.seed);
  SeparatorFm fm(g, sep, eps, rng);
  // Each round runs several randomized searches; zero-gain plateaus often
  // hide an improvement that only some visiting orders find.
  for (int round = 0; round < options.max_rounds; ++round) {
    bool improved = false;
    for (int restart = 0; restart < options.restarts; ++restart) {
      std::vector<NodeID> nodes = sep.separator_nodes();
      if (nodes.empty()) break;
      rng.shuffle(std::span<NodeID>(nodes));
      std::size_t size = nodes.size();
      if (options.subset_size != 0) size = std::min(options.subset_size, size);
      improved |= fm.search(std::span<const NodeID>(nodes).first(size));
    }
    if (!improved) break;
  }
  return sep;
}

namespace {

bool is_proper(const Separator& s) {
  return s.weight(Side::kV1) > 0 && s.weight(Side::kV2) > 0;
}

// Proper separators first, then lighter, then better balanced.
bool better(const Separator& a, const Separator& b) {
  if (is_proper(a) != is_proper(b)) return is_proper(a);
  if (a.separator_weight() != b.separator_weight()) {
    return a.separator_weight() < b.separator_weight();
  }
  return std::max(a.weight(Side::kV1), a.weight(Side::kV2)) <
         std::max(b.weight(Side::kV1), b.weight(Side::kV2));
}

// A bisection with an empty side yields a trivial separator. Replace it by
// the lightest neighborhood separator {v} | N(v) | rest, which is proper
// unless the graph is complete.
Separator make_proper(const Graph& g, Separator sep, double eps) {
  if (is_proper(sep)) return sep;
  const Weight bound = separator_side_bound(g, eps);
  const Weight total = g.total_node_weight();
  NodeID best = kInvalidNode;
  bool best_proper = false;
  Weight best_weight = 0;
  for (NodeID v = 0; v < g.n(); ++v) {
    if (g.node_weight(v) > bound) continue;
    Weight around = 0;
    for (const NodeID u : g.neighbors(v)) around += g.node_weight(u);
    const Weight rest = total - around - g.node_weight(v);
    if (rest > bound) continue;
    const bool proper = rest > 0;
    if (best == kInvalidNode || (proper && !best_proper) ||
        (proper == best_proper && around < best_weight)) {
      best = v;
      best_proper = proper;
      best_weight = around;
    }
  }
  if (best == kInvalidNode) return sep;
  std::vector<Side> labels(g.n(), Side::kV2);
  labels[best] = Side::kV1;
  for (const NodeID u : g.neighbors(best)) labels[u] = Side::kSeparator;
  return Separator(g, std::move(labels));
}

Separator refine_separator_level(const Graph& g, Separator sep, double eps, Rng& rng) {
  SeparatorFmOptions all;
  all.seed = rng.next();
  sep = fm_separator_refine(g, std::move(sep), eps, all);
  SeparatorFmOptions localized;
  localized.seed = rng.next();
  localized.subset_size = std::max<std::size_t>(
      1, (sep.separator_nodes().size() + 3) / 4);
  sep = fm_separator_refine(g, std::move(sep), eps, localized);
  return flow_refine(g, std::move(sep), eps);
}

}  // namespace

Separator multilevel_separator(const Graph& g, double eps,
                               const PartitionConfig& config) {
  PartitionConfig bisect = config;
  bisect.k = 2;
  bisect.eps = eps;
  bisect.validate();
  if (g.n() < 2) return Separator(g, std::vector<Side>(g.n(), Side::kV1));

  Rng rng(config.seed);
  PartitionConfig level_config = bisect;
  level_config.seed = rng.next();
  const Hierarchy h = coarsen(g, level_config);

  // The coarsest graph is small, so several independent initial separators
  // are affordable; the lightest (then most balanced) one is kept.
  std::size_t level = h.num_levels() - 1;
  Separator sep;
  bool have = false;
  for (int attempt = 0; attempt < std::max(1, config.init_attempts); ++attempt) {
    PartitionConfig attempt_config = level_config;
    attempt_config.seed = rng.next();
    attempt_config.init_attempts = 1;
    Partition bisection;
    for (;;) {
      try {
        bisection = initial_partition(h.levels[level], attempt_config);
        break;
      } catch (const InfeasibleError&) {
        if (level == 0) throw;
        --level;
        have = false;
      }
    }
    const Graph& coarse = h.levels[level];
    Separator candidate = refine_separator_level(
        coarse, make_proper(coarse, derive_separator(coarse, bisection), eps), eps, rng);
    if (!have || better(candidate, sep)) sep = std::move(candidate);
    have = true;
  }
  while (level > 0) {
    --level;
    const Graph& fine = h.levels[level];
    std::vector<Side> labels(fine.n());
    for (NodeID v = 0; v < fine.n(); ++v) labels[v] = sep.side(h.maps[level][v]);
    sep = Separator(fine, std::move(labels));
    sep = refine_separator_level(fine, std::move(sep), eps, rng);
  }
  return sep;
}

}  // namespace mlgp
