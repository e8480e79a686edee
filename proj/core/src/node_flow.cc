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
#include <limits>
#include <queue>
#include <vector>

#include "mlgp/separator.h"

namespace mlgp {

namespace {

// Dinic's algorithm on an explicit arc list.
class Dinic {
 public:
  explicit Dinic(std::size_t n) : head_(n, -1), level_(n), iter_(n) {}

  void add_arc(std::size_t from, std::size_t to, Weight capacity) {
    arcs_.push_back({to, head_[from], capacity});
    head_[from] = static_cast<int>(arcs_.size() - 1);
    arcs_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(arcs_.size() - 1);
  }

  Weight max_flow(std::size_t s, std::size_t t) {
    Weight flow = 0;
    while (build_levels(s, t)) {
      std::copy(head_.begin(), head_.end(), iter_.begin());
      while (const Weight pushed = augment(s, t, std::numeric_limits<Weight>::max())) {
        flow += pushed;
      }
    }
    return flow;
  }

  // Residual reachability from s (forward) or to t (backward).
  std::vector<char> reachable_from(std::size_t s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (int a = head_[v]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].residual > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          stack.push_back(arcs_[a].to);
        }
      }
    }
    return seen;
  }

  std::vector<char> reaching(std::size_t t) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<std::size_t> stack{t};
    seen[t] = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      // Arc a ends at v; its partner a^1 starts at v and ends at the tail.
      for (int b = head_[v]; b != -1; b = arcs_[b].next) {
        const int a = b ^ 1;
        const std::size_t tail = arcs_[b].to;
        if (arcs_[a].residual > 0 && !seen[tail]) {
          seen[tail] = 1;
          stack.push_back(tail);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    std::size_t to;
    int next;
    Weight residual;
  };

  bool build_levels(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> queue;
    level_[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop();
      for (int a = head_[v]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].residual > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[v] + 1;
          queue.push(arcs_[a].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  Weight augment(std::size_t v, std::size_t t, Weight limit) {
    if (v == t) return limit;
    for (int& a = iter_[v]; a != -1; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.residual <= 0 || level_[arc.to] != level_[v] + 1) continue;
      const Weight pushed = augment(arc.to, t, std::min(limit, arc.residual));
      if (pushed > 0) {
        arc.residual -= pushed;
        arcs_[a ^ 1].residual += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

constexpr std::size_t kSource = 0;
constexpr std::size_t kSink = 1;
std::size_t in_copy(NodeID i) { return 2 + 2 * static_cast<std::size_t>(i); }
std::size_t out_copy(NodeID i) { return 3 + 2 * static_cast<std::size_t>(i); }

}  // namespace

std::optional<FlowNetwork> build_flow_problem(const Graph& g, const Separator& sep,
                                              double eps) {
  if (sep.separator_weight() == 0) return std::nullopt;
  const Weight bound = separator_side_bound(g, eps);
  const Weight c1 = sep.weight(Side::kV1);
  const Weight c2 = sep.weight(Side::kV2);
  const Weight cs = sep.separator_weight();

  std::vector<NodeID> local(g.n(), kInvalidNode);
  FlowNetwork net;
  net.infinity = g.total_node_weight() + 1;
  auto add = [&](NodeID v) {
    local[v] = static_cast<NodeID>(net.nodes.size());
    net.nodes.push_back(v);
    net.capacity.push_back(g.node_weight(v));
  };
  const std::vector<NodeID> separator = sep.separator_nodes();
  for (const NodeID v : separator) add(v);

  auto grow = [&](Side side, Weight budget) {
    std::vector<NodeID> layer = separator;
    std::vector<NodeID> last;
    Weight added = 0;
    for (;;) {
      std::vector<NodeID> next;
      Weight next_weight = 0;
      for (const NodeID v : layer) {
        for (const NodeID u : g.neighbors(v)) {
          if (sep.side(u) == side && local[u] == kInvalidNode) {
            local[u] = kInvalidNode - 1;  // queued
            next.push_back(u);
            next_weight += g.node_weight(u);
          }
        }
      }
      if (next.empty() || added + next_weight > budget) {
        for (const NodeID u : next) local[u] = kInvalidNode;
        break;
      }
      for (const NodeID u : next) add(u);
      added += next_weight;
      last = next;
      layer = std::move(next);
    }
    return last;
  };
  const std::vector<NodeID> last1 = grow(Side::kV1, bound - c2 - cs);
  const std::vector<NodeID> last2 = grow(Side::kV2, bound - c1 - cs);

  auto terminals = [&](Side side, const std::vector<NodeID>& last) {
    std::vector<NodeID> result;
    auto touches_outside = [&](NodeID v) {
      for (const NodeID u : g.neighbors(v)) {
        if (sep.side(u) == side && local[u] == kInvalidNode) return true;
      }
      return false;
    };
    if (last.empty()) {
      for (const NodeID v : separator) {
        if (touches_outside(v)) result.push_back(local[v]);
      }
      return result;
    }
    for (const NodeID v : last) {
      if (touches_outside(v)) result.push_back(local[v]);
    }
    if (result.empty()) {
      // The BFS exhausted this side; its deepest layer is the border.
      for (const NodeID v : last) result.push_back(local[v]);
    }
    return result;
  };
  net.source_side = terminals(Side::kV1, last1);
  net.sink_side = terminals(Side::kV2, last2);

  for (NodeID i = 0; i < net.nodes.size(); ++i) {
    for (const NodeID u : g.neighbors(net.nodes[i])) {
      if (local[u] != kInvalidNode && local[u] > i) net.edges.emplace_back(i, local[u]);
    }
  }
  return net;
}

VertexCut node_capacitated_maxflow(const FlowNetwork& network) {
  const auto n = static_cast<NodeID>(network.nodes.size());
  Dinic dinic(2 + 2 * static_cast<std::size_t>(n));
  for (NodeID i = 0; i < n; ++i) dinic.add_arc(in_copy(i), out_copy(i), network.capacity[i]);
  for (const auto& [a, b] : network.edges) {
    dinic.add_arc(out_copy(a), in_copy(b), network.infinity);
    dinic.add_arc(out_copy(b), in_copy(a), network.infinity);
  }
  for (const NodeID i : network.source_side) dinic.add_arc(kSource, in_copy(i), network.infinity);
  for (const NodeID i : network.sink_side) dinic.add_arc(out_copy(i), kSink, network.infinity);

  VertexCut cut;
  cut.flow_value = dinic.max_flow(kSource, kSink);
  const std::vector<char> from_source = dinic.reachable_from(kSource);
  const std::vector<char> to_sink = dinic.reaching(kSink);
  for (NodeID i = 0; i < n; ++i) {
    if (from_source[in_copy(i)] && !from_source[out_copy(i)]) cut.source_cut.push_back(i);
    if (to_sink[out_copy(i)] && !to_sink[in_copy(i)]) cut.sink_cut.push_back(i);
  }
  return cut;
}

namespace {

// Labels the region after removing `cut`: nodes connected to the `anchor`
// terminals get `anchor_side`, the rest of the region the opposite side.
Separator relabel(const Graph& g, const Separator& sep, const FlowNetwork& net,
                  const std::vector<NodeID>& cut, const std::vector<NodeID>& anchors,
                  Side anchor_side) {
  const auto n = static_cast<NodeID>(net.nodes.size());
  std::vector<char> in_cut(n, 0);
  for (const NodeID i : cut) in_cut[i] = 1;
  std::vector<std::vector<NodeID>> adjacency(n);
  for (const auto& [a, b] : net.edges) {
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
  std::vector<char> reached(n, 0);
  std::vector<NodeID> stack;
  for (const NodeID i : anchors) {
    if (!in_cut[i] && !reached[i]) {
      reached[i] = 1;
      stack.push_back(i);
    }
  }
  while (!stack.empty()) {
    const NodeID v = stack.back();
    stack.pop_back();
    for (const NodeID u : adjacency[v]) {
      if (!in_cut[u] && !reached[u]) {
        reached[u] = 1;
        stack.push_back(u);
      }
    }
  }
  const Side other = anchor_side == Side::kV1 ? Side::kV2 : Side::kV1;
  Separator result = sep;
  for (NodeID i = 0; i < n; ++i) {
    const Side s = in_cut[i] ? Side::kSeparator : (reached[i] ? anchor_side : other);
    result.set(net.nodes[i], s, g.node_weight(net.nodes[i]));
  }
  return result;
}

Weight heavier_side(const Separator& s) {
  return std::max(s.weight(Side::kV1), s.weight(Side::kV2));
}

}  // namespace

Separator flow_refine(const Graph& g, Separator sep, double eps) {
  const std::optional<FlowNetwork> net = build_flow_problem(g, sep, eps);
  if (!net || net->source_side.empty() || net->sink_side.empty()) return sep;
  const VertexCut cut = node_capacitated_maxflow(*net);
  if (cut.flow_value > sep.separator_weight()) return sep;

  const Separator candidates[] = {
      relabel(g, sep, *net, cut.source_cut, net->source_side, Side::kV1),
      relabel(g, sep, *net, cut.sink_cut, net->sink_side, Side::kV2),
  };
  const Separator* best = nullptr;
  for (const Separator& candidate : candidates) {
    if (!is_valid_separator(g, candidate) ||
        !is_balanced_separator(g, candidate, eps) ||
        candidate.weight(Side::kV1) == 0 || candidate.weight(Side::kV2) == 0) {
      continue;
    }
    if (best == nullptr || heavier_side(candidate) < heavier_side(*best)) {
      best = &candidate;
    }
  }
  if (best == nullptr) return sep;
  if (best->separator_weight() < sep.separator_weight() ||
      heavier_side(*best) < heavier_side(sep)) {
    return *best;
  }
  return sep;
}

}  // namespace mlgp
