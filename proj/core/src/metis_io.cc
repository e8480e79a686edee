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

#include "mlgp/metis_io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

namespace mlgp {

namespace {

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_number)
      : rest_(line), line_number_(line_number) {}

  // Returns false at end of line.
  bool next(std::int64_t& value) {
    while (!rest_.empty() && is_space(rest_.front())) rest_.remove_prefix(1);
    if (rest_.empty()) return false;
    const auto [ptr, ec] =
        std::from_chars(rest_.data(), rest_.data() + rest_.size(), value);
    if (ec != std::errc() ||
        (ptr != rest_.data() + rest_.size() && !is_space(*ptr))) {
      throw error("expected an integer");
    }
    rest_.remove_prefix(static_cast<std::size_t>(ptr - rest_.data()));
    return true;
  }

  std::int64_t require(const char* what) {
    std::int64_t value = 0;
    if (!next(value)) throw error(std::string("missing ") + what);
    return value;
  }

  InputError error(const std::string& message) const {
    return InputError("line " + std::to_string(line_number_) + ": " + message);
  }

 private:
  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  }

  std::string_view rest_;
  std::size_t line_number_;
};

bool is_comment(const std::string& line) {
  return !line.empty() && line.front() == '%';
}

}  // namespace

Graph read_metis(std::istream& in) {
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!is_comment(line)) break;
  }
  if (line_number == 0 || is_comment(line)) {
    throw InputError("line 1: missing header");
  }

  LineParser header(line, line_number);
  const std::int64_t n = header.require("node count");
  const std::int64_t m = header.require("edge count");
  std::int64_t fmt = 0;
  header.next(fmt);
  std::int64_t extra = 0;
  if (header.next(extra) && extra != 1) {
    throw header.error("multi-constraint graphs are not supported");
  }
  if (n < 0 || m < 0 || n >= static_cast<std::int64_t>(kInvalidNode)) {
    throw header.error("invalid node or edge count");
  }
  if (fmt != 0 && fmt != 1 && fmt != 10 && fmt != 11) {
    throw header.error("unsupported fmt " + std::to_string(fmt));
  }
  const bool has_node_weights = fmt >= 10;
  const bool has_edge_weights = fmt % 10 == 1;

  const auto num_nodes = static_cast<NodeID>(n);
  GraphBuilder builder(num_nodes);
  // Arc multiset before merging, for the symmetry check: (v,u) -> weight.
  std::vector<std::vector<std::pair<NodeID, Weight>>> raw(num_nodes);
  std::vector<std::size_t> node_line(num_nodes, 0);
  std::int64_t arcs = 0;
  std::int64_t self_loops = 0;
  Weight total_node_weight = 0;

  NodeID v = 0;
  while (v < num_nodes) {
    if (!std::getline(in, line)) {
      throw InputError("line " + std::to_string(line_number + 1) +
                       ": expected " + std::to_string(n) +
                       " adjacency lines, file ends after " + std::to_string(v));
    }
    ++line_number;
    if (is_comment(line)) continue;
    node_line[v] = line_number;
    LineParser parser(line, line_number);
    if (has_node_weights) {
      const std::int64_t w = parser.require("node weight");
      if (w < 1) throw parser.error("node weight must be positive");
      if (w > kMaxTotalWeight - total_node_weight) {
        throw parser.error("total node weight overflows");
      }
      total_node_weight += w;
      builder.set_node_weight(v, w);
    }
    std::int64_t target = 0;
    while (parser.next(target)) {
      if (target < 1 || target > n) {
        throw parser.error("neighbor " + std::to_string(target) +
                           " out of range");
      }
      Weight w = 1;
      if (has_edge_weights) {
        w = parser.require("edge weight");
        if (w < 1) throw parser.error("edge weight must be positive");
      }
      const auto u = static_cast<NodeID>(target - 1);
      ++arcs;
      if (u == v) {
        ++self_loops;
        continue;
      }
      raw[v].emplace_back(u, w);
      builder.add_arc(v, u, w);
    }
    ++v;
  }
  while (std::getline(in, line)) {
    ++line_number;
    if (is_comment(line)) continue;
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw InputError("line " + std::to_string(line_number) +
                       ": unexpected content after last node");
    }
  }

  // Merge per node and compare both directions.
  for (auto& list : raw) {
    std::sort(list.begin(), list.end());
    std::size_t out = 0;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (out > 0 && list[out - 1].first == list[i].first) {
        list[out - 1].second += list[i].second;
      } else {
        list[out++] = list[i];
      }
    }
    list.resize(out);
  }
  for (NodeID a = 0; a < num_nodes; ++a) {
    for (const auto& [b, w] : raw[a]) {
      const auto& back = raw[b];
      const auto it = std::lower_bound(
          back.begin(), back.end(), std::pair<NodeID, Weight>{a, 0},
          [](const auto& x, const auto& y) { return x.first < y.first; });
      if (it == back.end() || it->first != a) {
        throw InputError("line " + std::to_string(node_line[a]) +
                         ": asymmetric adjacency, node " +
                         std::to_string(b + 1) + " lacks back-arc to " +
                         std::to_string(a + 1));
      }
      if (it->second != w) {
        throw InputError("line " + std::to_string(node_line[a]) +
                         ": asymmetric adjacency, edge weights differ between " +
                         std::to_string(a + 1) + " and " +
                         std::to_string(b + 1));
      }
    }
  }
  if (arcs != 2 * m && arcs - self_loops != 2 * m) {
    throw InputError("line 1: header declares " + std::to_string(m) +
                     " edges but adjacency lists contain " +
                     std::to_string(arcs) + " arcs");
  }
  return std::move(builder).build();
}

Graph load_metis(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file " + path.string());
  return read_metis(in);
}

void write_metis(std::ostream& out, const Graph& g) {
  bool node_weights = false;
  bool edge_weights = false;
  for (NodeID v = 0; v < g.n(); ++v) node_weights |= g.node_weight(v) != 1;
  for (const Weight w : g.arc_weights()) edge_weights |= w != 1;

  out << g.n() << ' ' << g.m();
  if (node_weights || edge_weights) {
    out << ' ' << (node_weights ? "1" : "0") << (edge_weights ? "1" : "0");
  }
  out << '\n';
  std::string line;
  for (NodeID v = 0; v < g.n(); ++v) {
    line.clear();
    if (node_weights) line += std::to_string(g.node_weight(v));
    g.for_each_neighbor(v, [&](NodeID u, Weight w) {
      if (!line.empty()) line += ' ';
      line += std::to_string(u + 1);
      if (edge_weights) {
        line += ' ';
        line += std::to_string(w);
      }
    });
    out << line << '\n';
  }
}

void save_metis(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  write_metis(out, g);
}

std::vector<std::uint32_t> read_label_file(const std::filesystem::path& path,
                                           std::size_t expected,
                                           std::uint32_t num_labels) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open solution file " + path.string());
  std::vector<std::uint32_t> labels;
  labels.reserve(expected);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    LineParser parser(line, line_number);
    std::int64_t value = 0;
    if (!parser.next(value)) {
      if (labels.size() == expected) continue;  // trailing blank lines
      throw parser.error("empty line");
    }
    std::int64_t trailing = 0;
    if (parser.next(trailing)) throw parser.error("expected a single value");
    if (labels.size() == expected) {
      throw parser.error("more lines than the graph has entries (" +
                         std::to_string(expected) + ")");
    }
    if (value < 0 || value >= num_labels) {
      throw parser.error("value " + std::to_string(value) +
                         " out of range [0, " + std::to_string(num_labels) +
                         ")");
    }
    labels.push_back(static_cast<std::uint32_t>(value));
  }
  if (labels.size() != expected) {
    throw InputError("line " + std::to_string(line_number + 1) + ": expected " +
                     std::to_string(expected) + " lines, found " +
                     std::to_string(labels.size()));
  }
  return labels;
}

void write_labels(std::ostream& out, std::span<const std::uint32_t> labels) {
  std::string buffer;
  for (const auto label : labels) {
    buffer += std::to_string(label);
    buffer += '\n';
  }
  out << buffer;
}

void write_label_file(const std::filesystem::path& path,
                      std::span<const std::uint32_t> labels) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  write_labels(out, labels);
}

}  // namespace mlgp
