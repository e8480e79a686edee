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

#include "cli.h"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mlgp/ba_generator.h"
#include "mlgp/mapping.h"
#include "mlgp/metis_io.h"
#include "mlgp/multilevel.h"
#include "mlgp/separator.h"
#include "mlgp/spac.h"

namespace mlgp::cli {

namespace {

struct Options {
  std::string graph_path;
  std::string solution_path;
  std::string output_path;
  std::uint32_t k = 2;
  double eps = 0.03;
  std::uint64_t seed = 0;
  int rounds = 3;
  int attempts = 10;
  std::string order = "random";
  std::string hierarchy;
  std::string type;

  std::uint64_t n = 0;
  std::uint64_t d = 1;
  std::uint64_t n0 = 0;
  std::string range;
  bool simplify = false;
  unsigned threads = 1;
};

std::string fixed(double value) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << value;
  return s.str();
}

PartitionConfig make_config(const Options& o) {
  PartitionConfig config;
  config.k = o.k;
  config.eps = o.eps;
  config.seed = o.seed;
  config.rounds = o.rounds;
  config.init_attempts = o.attempts;
  config.order = o.order == "degree" ? NodeOrder::kAscendingDegree : NodeOrder::kRandom;
  return config;
}

void write_output(const std::string& path, std::span<const std::uint32_t> labels) {
  if (!path.empty()) write_label_file(path, labels);
}

void report_partition(std::ostream& out, const Graph& g, const Partition& p) {
  const Weight per_block = (g.total_node_weight() + p.k() - 1) / p.k();
  out << "k=" << p.k() << '\n'
      << "eps=" << fixed(p.eps()) << '\n'
      << "cut=" << cut_value(g, p) << '\n'
      << "max_block_weight=" << p.heaviest_block() << '\n'
      << "lmax=" << p.lmax() << '\n'
      << "imbalance="
      << fixed(per_block == 0 ? 0.0
                              : static_cast<double>(p.heaviest_block()) / per_block - 1.0)
      << '\n'
      << "balanced=" << (p.is_balanced() ? 1 : 0) << '\n';
}

void report_separator(std::ostream& out, const Graph& g, const Separator& s, double eps) {
  out << "eps=" << fixed(eps) << '\n'
      << "separator_weight=" << s.separator_weight() << '\n'
      << "separator_nodes=" << s.separator_nodes().size() << '\n'
      << "v1_weight=" << s.weight(Side::kV1) << '\n'
      << "v2_weight=" << s.weight(Side::kV2) << '\n'
      << "bound=" << separator_side_bound(g, eps) << '\n'
      << "valid=" << (is_valid_separator(g, s) ? 1 : 0) << '\n'
      << "balanced=" << (is_balanced_separator(g, s, eps) ? 1 : 0) << '\n';
}

void report_edge_partition(std::ostream& out, const Graph& g, const EdgePartition& ep) {
  const EdgePartitionQuality q = eval_edge_partition(g, ep);
  out << "k=" << ep.k << '\n'
      << "edges=" << g.m() << '\n'
      << "replication_factor=" << fixed(q.replication_factor) << '\n'
      << "max_block_edges=" << q.max_block_edges << '\n';
}

void report_mapping(std::ostream& out, const Graph& g, const ProcessMapping& m,
                    const HierarchySpec& spec) {
  out << "pes=" << spec.num_pes() << '\n'
      << "cost=" << comm_cost(g, m, spec) << '\n'
      << "bijection=" << (is_bijection(m, spec.num_pes()) ? 1 : 0) << '\n';
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text,
                                                    std::uint64_t total) {
  if (text.empty()) return {0, total};
  const std::size_t colon = text.find(':');
  auto parse = [&](std::string_view token) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw InputError("--range: expected lo:hi, got '" + text + "'");
    }
    return value;
  };
  if (colon == std::string::npos) throw InputError("--range: expected lo:hi, got '" + text + "'");
  const std::string_view view(text);
  return {parse(view.substr(0, colon)), parse(view.substr(colon + 1))};
}

void validate_common(const Options& o) {
  if (o.k < 1) throw InputError("--k must be at least 1");
  if (!(o.eps >= 0.0)) throw InputError("--eps must be non-negative");
  if (o.rounds < 1) throw InputError("--rounds must be at least 1");
  if (o.attempts < 1) throw InputError("--attempts must be at least 1");
}

int run_partition(const Options& o, std::ostream& out) {
  validate_common(o);
  const Graph g = load_metis(o.graph_path);
  const Partition p = partition(g, make_config(o));
  write_output(o.output_path, p.assignment());
  report_partition(out, g, p);
  return kExitOk;
}

int run_separator(const Options& o, std::ostream& out) {
  validate_common(o);
  const Graph g = load_metis(o.graph_path);
  const Separator s = multilevel_separator(g, o.eps, make_config(o));
  std::vector<std::uint32_t> labels(s.n());
  for (NodeID v = 0; v < s.n(); ++v) labels[v] = static_cast<std::uint32_t>(s.side(v));
  write_output(o.output_path, labels);
  report_separator(out, g, s, o.eps);
  return kExitOk;
}

int run_edge_partition(const Options& o, std::ostream& out) {
  validate_common(o);
  const Graph g = load_metis(o.graph_path);
  const EdgePartition ep = edge_partition(g, make_config(o));
  write_output(o.output_path, ep.edge_block);
  report_edge_partition(out, g, ep);
  out << "dominant_edges_cut=" << ep.dominant_edges_cut << '\n';
  return kExitOk;
}

int run_map(const Options& o, std::ostream& out) {
  validate_common(o);
  const HierarchySpec spec = HierarchySpec::parse(o.hierarchy);
  const Graph g = load_metis(o.graph_path);
  const ProcessMapping m = top_down_map(g, spec, make_config(o));
  write_output(o.output_path, m.pe_of_task);
  report_mapping(out, g, m, spec);
  return kExitOk;
}

int run_generate(const Options& o, std::ostream& out) {
  BaParams params;
  params.n = o.n;
  params.d = o.d;
  params.n0 = o.n0;
  params.hash_seed = o.seed;
  params.validate();
  const auto [lo, hi] = parse_range(o.range, params.num_edges());
  const std::vector<BaEdge> edges = ba_generate(params, lo, hi, o.threads);

  std::ofstream file;
  if (!o.output_path.empty()) {
    file.open(o.output_path);
    if (!file) throw InputError("cannot write " + o.output_path);
  }
  std::ostream& sink = o.output_path.empty() ? out : file;
  if (o.simplify) {
    write_metis(sink, simplify_edges(params.n, edges));
  } else {
    std::string buffer;
    for (const auto& [u, v] : edges) {
      buffer += std::to_string(u);
      buffer += ' ';
      buffer += std::to_string(v);
      buffer += '\n';
    }
    sink << buffer;
  }
  return kExitOk;
}

int run_evaluate(const Options& o, std::ostream& out) {
  const Graph g = load_metis(o.graph_path);
  if (o.type == "partition") {
    validate_common(o);
    auto labels = read_label_file(o.solution_path, g.n(), o.k);
    report_partition(out, g, Partition(g, o.k, o.eps, std::move(labels)));
  } else if (o.type == "separator") {
    const auto labels = read_label_file(o.solution_path, g.n(), 3);
    std::vector<Side> sides(labels.size());
    for (std::size_t v = 0; v < labels.size(); ++v) sides[v] = static_cast<Side>(labels[v]);
    report_separator(out, g, Separator(g, std::move(sides)), o.eps);
  } else if (o.type == "edgepartition") {
    validate_common(o);
    auto labels = read_label_file(o.solution_path, g.m(), o.k);
    report_edge_partition(out, g, make_edge_partition(g, o.k, std::move(labels)));
  } else {
    const HierarchySpec spec = HierarchySpec::parse(o.hierarchy);
    if (g.n() != spec.num_pes()) {
      throw InputError("--hierarchy describes " + std::to_string(spec.num_pes()) +
                       " PEs but the graph has " + std::to_string(g.n()) + " tasks");
    }
    const auto pes = static_cast<std::uint32_t>(spec.num_pes());
    ProcessMapping m{read_label_file(o.solution_path, g.n(), pes)};
    report_mapping(out, g, m, spec);
  }
  return kExitOk;
}

void add_partition_flags(CLI::App* app, Options& o, bool needs_k) {
  auto* k = app->add_option("--k", o.k, "Number of blocks");
  if (needs_k) k->required();
  app->add_option("--eps", o.eps, "Imbalance parameter")->capture_default_str();
  app->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  app->add_option("--rounds", o.rounds, "Label propagation rounds")->capture_default_str();
  app->add_option("--attempts", o.attempts, "Initial partitioning repetitions")
      ->capture_default_str();
  app->add_option("--order", o.order, "Label propagation node order")
      ->check(CLI::IsMember({"random", "degree"}))
      ->capture_default_str();
  app->add_option("-o,--output", o.output_path, "Solution file");
  app->add_option("graph", o.graph_path, "METIS graph file")->required();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Multilevel graph partitioning toolkit"};
  app.require_subcommand(1);

  auto* part = app.add_subcommand("partition", "k-way node partition");
  add_partition_flags(part, o, true);

  auto* sep = app.add_subcommand("separator", "Balanced node separator");
  add_partition_flags(sep, o, false);

  auto* edge = app.add_subcommand("edgepartition", "Vertex-cut edge partition");
  add_partition_flags(edge, o, true);

  auto* map = app.add_subcommand("map", "Top-down process mapping");
  add_partition_flags(map, o, false);
  map->add_option("--hierarchy", o.hierarchy, "Machine hierarchy a1:a2:...:ak")->required();

  auto* gen = app.add_subcommand("generate", "Barabasi-Albert edge list");
  gen->add_option("--n", o.n, "Number of nodes")->required();
  gen->add_option("--d", o.d, "Edges per new node")->capture_default_str();
  gen->add_option("--n0", o.n0, "Seed graph nodes")->capture_default_str();
  gen->add_option("--seed", o.seed, "Hash seed")->capture_default_str();
  gen->add_option("--range", o.range, "Edge index range lo:hi");
  gen->add_flag("--simplify", o.simplify, "Emit a simple METIS graph");
  gen->add_option("--threads", o.threads, "Worker threads")->capture_default_str();
  gen->add_option("-o,--output", o.output_path, "Output file (default stdout)");

  auto* eval = app.add_subcommand("evaluate", "Metrics of a solution file");
  eval->add_option("--type", o.type, "Solution type")
      ->check(CLI::IsMember({"partition", "separator", "edgepartition", "mapping"}))
      ->required();
  eval->add_option("--k", o.k, "Number of blocks");
  eval->add_option("--eps", o.eps, "Imbalance parameter")->capture_default_str();
  eval->add_option("--hierarchy", o.hierarchy, "Machine hierarchy (mapping)");
  eval->add_option("graph", o.graph_path, "METIS graph file")->required();
  eval->add_option("solution", o.solution_path, "Solution file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    if (part->parsed()) return run_partition(o, out);
    if (sep->parsed()) {
      if (sep->count("--eps") == 0) o.eps = 0.2;
      return run_separator(o, out);
    }
    if (edge->parsed()) return run_edge_partition(o, out);
    if (map->parsed()) return run_map(o, out);
    if (gen->parsed()) return run_generate(o, out);
    if (eval->parsed()) {
      if (o.type == "mapping" && o.hierarchy.empty()) {
        throw InputError("--hierarchy is required for --type mapping");
      }
      if (o.type == "separator" && eval->count("--eps") == 0) o.eps = 0.2;
      return run_evaluate(o, out);
    }
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace mlgp::cli
