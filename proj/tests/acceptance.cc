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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "cli.h"
#include "mlgp/ba_generator.h"
#include "mlgp/label_propagation.h"
#include "mlgp/mapping.h"
#include "mlgp/metis_io.h"
#include "mlgp/multilevel.h"
#include "mlgp/separator.h"
#include "mlgp/spac.h"
#include "oracles.h"
#include "test_graphs.h"

namespace mlgp {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, format, args...);
  return buffer;
}

PartitionConfig config(BlockID k, double eps, std::uint64_t seed) {
  PartitionConfig c;
  c.k = k;
  c.eps = eps;
  c.seed = seed;
  return c;
}

std::vector<std::uint32_t> blocks_of(const Partition& p) {
  return {p.assignment().begin(), p.assignment().end()};
}

// Recomputes block weights from scratch instead of trusting the partition.
bool independently_balanced(const Graph& g, const Partition& p, BlockID k, double eps) {
  if (p.n() != g.n()) return false;
  std::vector<Weight> weight(k, 0);
  for (NodeID v = 0; v < g.n(); ++v) {
    if (p.block(v) >= k) return false;
    weight[p.block(v)] += g.node_weight(v);
  }
  const Weight total = g.total_node_weight();
  const Weight per_block = (total + k - 1) / k;
  const auto lmax = static_cast<Weight>(std::floor((1.0 + eps) * per_block + 1e-9));
  for (const Weight w : weight) {
    if (w > lmax) return false;
  }
  return true;
}

Outcome balance_soundness() {
  const auto start = Clock::now();
  Rng rng(1001);
  const BlockID ks[] = {2, 3, 4, 8};
  const double epss[] = {0.0, 0.03, 0.5};
  int violations = 0, infeasible = 0, unproven = 0;
  for (int run = 0; run < 1000; ++run) {
    const BlockID k = ks[run % 4];
    const double eps = epss[(run / 4) % 3];
    const NodeID n = 1 + static_cast<NodeID>(rng.below(256));
    // Unit node weights keep eps = 0 feasible; weighted nodes otherwise.
    const Weight max_nw = eps == 0.0 ? 1 : 3;
    const Graph g = testing::random_connected(n, 3.0 / n, rng, max_nw, 5);
    try {
      const Partition p = partition(g, config(k, eps, run));
      violations += !independently_balanced(g, p, k, eps);
    } catch (const InfeasibleError&) {
      // Only accepted with a certificate: a node heavier than L_max.
      ++infeasible;
      unproven += g.max_node_weight() <= max_block_weight(g.total_node_weight(), k, eps);
    }
  }
  const double t = seconds_since(start);
  return {violations == 0 && unproven == 0 && t < 60.0,
          fmt("1000 runs, %d balance violations, %d certified infeasible, %d unproven "
              "infeasible, %.1fs",
              violations, infeasible - unproven, unproven, t)};
}

Outcome brute_force_cut_parity() {
  const auto start = Clock::now();
  Rng rng(2002);
  int matched = 0, valid = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const NodeID n = 2 + static_cast<NodeID>(rng.below(9));
    const Graph g = testing::random_connected(n, 0.35, rng, 3, 4);
    const Weight lmax = max_block_weight(g.total_node_weight(), 2, 0.5);
    Weight best = std::numeric_limits<Weight>::max();
    bool all_valid = true;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Partition p = partition(g, config(2, 0.5, seed * 7919 + trial));
      all_valid &= independently_balanced(g, p, 2, 0.5);
      best = std::min(best, oracle::edge_cut(g, blocks_of(p)));
    }
    valid += all_valid;
    matched += best == *oracle::optimal_bisection_cut(g, lmax);
  }
  const double t = seconds_since(start);
  return {matched >= 90 && valid == 100 && t < 120.0,
          fmt("optimal on %d/100, valid on %d/100, %.1fs", matched, valid, t)};
}

// Random balanced partition; gives up on instances where sampling keeps failing.
std::optional<Partition> random_balanced(const Graph& g, BlockID k, double eps, Rng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<BlockID> blocks(g.n());
    for (auto& b : blocks) b = static_cast<BlockID>(rng.below(k));
    Partition p(g, k, eps, blocks);
    if (p.is_balanced()) return p;
  }
  return std::nullopt;
}

Outcome combine_dominance() {
  Rng rng(3003);
  int dominated = 0;
  int resampled = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const NodeID n = 4 + static_cast<NodeID>(rng.below(61));
    const Graph g = testing::random_connected(n, 4.0 / n, rng, 2, 4);
    const BlockID k = 2 + static_cast<BlockID>(rng.below(3));
    const double eps = 0.1;
    // Mix refined parents with raw random ones; instances without a balanced
    // partition are replaced.
    std::optional<Partition> p1, p2;
    try {
      p1 = trial % 3 == 0 ? random_balanced(g, k, eps, rng)
                          : partition(g, config(k, eps, trial));
      p2 = trial % 2 == 0 ? random_balanced(g, k, eps, rng)
                          : partition(g, config(k, eps, trial + 1000));
    } catch (const InfeasibleError&) {
    }
    if (!p1 || !p2) {
      ++resampled;
      --trial;
      continue;
    }
    const Partition c = combine(g, *p1, *p2, config(k, eps, trial + 2000));
    const Weight parents = std::min(oracle::edge_cut(g, blocks_of(*p1)),
                                    oracle::edge_cut(g, blocks_of(*p2)));
    dominated += independently_balanced(g, c, k, eps) &&
                 oracle::edge_cut(g, blocks_of(c)) <= parents;
  }
  return {dominated == 200, fmt("combine <= best parent and balanced on %d/200 "
                                "(%d infeasible instances resampled)",
                                dominated, resampled)};
}

Outcome flow_optimality() {
  Rng rng(4004);
  int checked = 0, equal = 0;
  while (checked < 100) {
    const NodeID n = 4 + static_cast<NodeID>(rng.below(9));
    const Graph g = testing::random_connected(n, 0.3, rng, 4, 1);
    std::vector<BlockID> blocks(n);
    for (auto& b : blocks) b = static_cast<BlockID>(rng.below(2));
    const Separator sep = derive_separator(g, Partition(g, 2, 1.0, blocks));
    const auto net = build_flow_problem(g, sep, 0.5 + 0.5 * static_cast<double>(rng.below(3)));
    if (!net || net->nodes.size() > 12) continue;
    ++checked;
    const VertexCut cut = node_capacitated_maxflow(*net);
    equal += cut.flow_value == oracle::min_region_vertex_cut(
                                   static_cast<NodeID>(net->nodes.size()), net->capacity,
                                   net->edges, net->source_side, net->sink_side);
  }
  return {equal == 100, fmt("max-flow equals brute-force region cut on %d/100", equal)};
}

Outcome separator_end_to_end() {
  struct Case {
    const char* name;
    Graph g;
    double eps;
  };
  const Case cases[] = {{"P5", testing::path(5), 0.3},
                        {"grid4x4", testing::grid(4, 4), 0.3},
                        {"K4", testing::complete(4), 1.0}};
  bool pass = true;
  std::string detail;
  for (const Case& c : cases) {
    const Separator sep = multilevel_separator(c.g, c.eps, config(2, c.eps, 0));
    const bool ok = is_valid_separator(c.g, sep) && is_balanced_separator(c.g, sep, c.eps);
    const auto best = oracle::optimal_proper_separator(c.g, separator_side_bound(c.g, c.eps));
    // K4 has no proper separator, so only validity and c(S) >= 2 apply.
    const bool optimal = best ? sep.separator_weight() == *best : sep.separator_weight() >= 2;
    pass &= ok && optimal;
    detail += fmt("%s c(S)=%lld oracle=%s valid+balanced=%d; ", c.name,
                  static_cast<long long>(sep.separator_weight()),
                  best ? std::to_string(*best).c_str() : "none", ok ? 1 : 0);
  }
  return {pass, detail.substr(0, detail.size() - 2)};
}

// Dominant edges can all stay uncut only if k blocks of at most floor(L/2)
// edges hold all m edges.
bool dominant_packing_feasible(const Graph& g, BlockID k, double eps) {
  const Weight lmax = max_block_weight(static_cast<Weight>(2 * g.m()), k, eps);
  return static_cast<Weight>(k) * (lmax / 2) >= static_cast<Weight>(g.m());
}

Outcome spac_structure() {
  Rng rng(6006);
  int structural = 0, checked = 0, zero_cut = 0, skipped = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const NodeID n = 4 + static_cast<NodeID>(rng.below(61));
    const Graph g = testing::random_connected(n, 3.0 / n, rng);
    const SpacGraph s = build_spac(g);
    bool ok = s.graph.n() == 2 * g.m();
    for (NodeID u = 0; u < s.graph.n() && ok; ++u) {
      int dominant = 0;
      s.graph.for_each_neighbor(u, [&](NodeID, Weight w) {
        dominant += w == s.mapping.dominant_weight;
      });
      ok = dominant == 1;
    }
    structural += ok;
    const BlockID k = 2 + static_cast<BlockID>(rng.below(3));
    const double eps = trial % 2 ? 0.03 : 0.1;
    if (!dominant_packing_feasible(g, k, eps)) {
      ++skipped;
      continue;
    }
    ++checked;
    zero_cut += edge_partition(g, config(k, eps, trial)).dominant_edges_cut == 0;
  }
  return {structural == 50 && zero_cut == checked,
          fmt("structure ok on %d/50; zero dominant cut on %d/%d packing-feasible "
              "instances (%d infeasible skipped)",
              structural, zero_cut, checked, skipped)};
}

double ccdf_slope(const std::vector<BaEdge>& edges, std::uint64_t n) {
  std::vector<std::uint64_t> degree(n, 0);
  for (const auto& [u, v] : edges) {
    ++degree[u];
    ++degree[v];
  }
  std::map<std::uint64_t, std::uint64_t> count;
  for (const auto d : degree) ++count[d];
  // Least squares of log CCDF against log degree at degrees present in [16, 256].
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int points = 0;
  std::uint64_t at_least = n;
  for (const auto& [d, c] : count) {
    if (d >= 16 && d <= 256) {
      const double x = std::log(static_cast<double>(d));
      const double y = std::log(static_cast<double>(at_least) / static_cast<double>(n));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++points;
    }
    at_least -= c;
  }
  return (points * sxy - sx * sy) / (points * sxx - sx * sx);
}

Outcome ba_laws() {
  const auto start = Clock::now();
  bool sources = true, first = true, chunks = true, slopes = true;
  std::string detail;
  for (const std::uint64_t d : {1, 4, 8}) {
    double slope_sum = 0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      BaParams p;
      p.n = 10000;
      p.d = d;
      p.hash_seed = seed * 1000003 + d;
      const auto edges = ba_generate(p, 0, p.num_edges(), 1);
      for (std::uint64_t i = 0; i < edges.size(); ++i) sources &= edges[i].first == i / d;
      first &= edges.front() == BaEdge(0, 0);
      if (seed == 0) {
        std::vector<BaEdge> pieces;
        const std::uint64_t total = p.num_edges();
        const std::uint64_t cuts[] = {0, 1, total / 9, total / 3, total / 3 + 7, total / 2,
                                      total - 5, total};
        for (int c = 0; c + 1 < 8; ++c) {
          const auto part = ba_generate(p, cuts[c], cuts[c + 1], 1);
          pieces.insert(pieces.end(), part.begin(), part.end());
        }
        chunks &= pieces == edges && ba_generate(p, 0, total, 7) == edges;
      }
      slope_sum += ccdf_slope(edges, p.n);
    }
    const double slope = slope_sum / 5;
    slopes &= std::abs(slope + 2.0) <= 0.5;
    detail += fmt("d=%llu slope %.2f; ", static_cast<unsigned long long>(d), slope);
  }
  const double t = seconds_since(start);
  return {sources && first && chunks && slopes && t < 60.0,
          fmt("source law %s, first edge %s, 1 vs 7 chunks %s, %s%.1fs",
              sources ? "ok" : "BROKEN", first ? "ok" : "BROKEN", chunks ? "identical" : "DIFFER",
              detail.c_str(), t)};
}

ProcessMapping random_bijection(NodeID n, Rng& rng) {
  const std::vector<NodeID> perm = rng.permutation(n);
  return {std::vector<std::uint32_t>(perm.begin(), perm.end())};
}

Outcome mapping_quality() {
  const Graph k4 = testing::complete(4);
  const HierarchySpec square({2, 2});
  const ProcessMapping m = top_down_map(k4, square, config(2, 0.0, 0));
  const Weight k4_cost = comm_cost(k4, m, square);
  const bool k4_ok = is_bijection(m, 4) && k4_cost == 10 &&
                     oracle::optimal_mapping_cost(k4, {2, 2}) == 10;
  Rng rng(8008);
  int wins = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const NodeID n = trial % 2 ? 16 : 8;
    const HierarchySpec spec(n == 8 ? std::vector<std::uint32_t>{2, 2, 2}
                                    : std::vector<std::uint32_t>{2, 2, 2, 2});
    const Graph g = testing::two_cluster(n, rng);
    const ProcessMapping mapped = top_down_map(g, spec, config(2, 0.0, trial));
    wins += is_bijection(mapped, n) &&
            comm_cost(g, mapped, spec) < comm_cost(g, random_bijection(n, rng), spec);
  }
  return {k4_ok && wins >= 95, fmt("K4 on (2,2) cost %lld; beats random bijection on %d/100",
                                   static_cast<long long>(k4_cost), wins)};
}

Outcome monotonicity_audit() {
  Rng rng(9009);
  int sclap = 0, fm = 0, sep_fm = 0, flow = 0;
  for (int run = 0; run < 500; ++run) {
    const NodeID n = 4 + static_cast<NodeID>(rng.below(120));
    const Graph g = testing::random_connected(n, 3.0 / n, rng, 3, 4);
    const BlockID k = 2 + static_cast<BlockID>(rng.below(4));
    const std::optional<Partition> start = random_balanced(g, k, 0.5, rng);
    std::optional<Separator> sep;
    for (int attempt = 0; attempt < 1000 && !sep; ++attempt) {
      std::vector<BlockID> bisection(n);
      for (auto& x : bisection) x = static_cast<BlockID>(rng.below(2));
      Separator candidate = derive_separator(g, Partition(g, 2, 1.0, bisection));
      if (is_balanced_separator(g, candidate, 0.5)) sep = std::move(candidate);
    }
    if (!start || !sep) {
      --run;
      continue;
    }
    const Partition& p = *start;
    const Weight before = oracle::edge_cut(g, blocks_of(p));
    LabelPropagationOptions lp;
    lp.seed = run;
    const Partition a = sclap_refine(g, p, lp);
    sclap += independently_balanced(g, a, k, 0.5) && oracle::edge_cut(g, blocks_of(a)) <= before;
    const Partition b = fm_refine(g, p, config(k, 0.5, run));
    fm += independently_balanced(g, b, k, 0.5) && oracle::edge_cut(g, blocks_of(b)) <= before;

    SeparatorFmOptions opts;
    opts.seed = run;
    opts.subset_size = run % 2 ? 0 : 2;
    const Separator s1 = fm_separator_refine(g, *sep, 0.5, opts);
    sep_fm += is_valid_separator(g, s1) && is_balanced_separator(g, s1, 0.5) &&
              s1.separator_weight() <= sep->separator_weight();
    const Separator s2 = flow_refine(g, *sep, 0.5);
    flow += is_valid_separator(g, s2) && is_balanced_separator(g, s2, 0.5) &&
            s2.separator_weight() <= sep->separator_weight();
  }
  return {sclap == 500 && fm == 500 && sep_fm == 500 && flow == 500,
          fmt("non-worsening: sclap_refine %d/500, fm_refine %d/500, "
              "fm_separator_refine %d/500, flow_refine %d/500",
              sclap, fm, sep_fm, flow)};
}

namespace fs = std::filesystem;

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

// Runs the CLI and returns its stdout followed by the artifact bytes.
std::string artifacts(std::vector<std::string> args, const fs::path& output) {
  fs::remove(output);
  args.insert(args.begin(), "mlgp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return std::to_string(code) + "\n" + out.str() + slurp(output);
}

Outcome cli_determinism() {
  const fs::path dir = fs::temp_directory_path() / "mlgp_acceptance";
  fs::create_directories(dir);
  const std::string graph = (dir / "g.graph").string();
  const std::string comm = (dir / "comm.graph").string();
  Rng rng(10010);
  save_metis(graph, testing::random_connected(400, 0.01, rng, 3, 3));
  save_metis(comm, testing::two_cluster(16, rng));
  const fs::path out = dir / "out";
  const std::string o = out.string();

  std::vector<std::vector<std::string>> variants[] = {
      {{"partition", "--k", "4", "--seed", "5", graph, "-o", o}},
      {{"separator", "--seed", "5", graph, "-o", o}},
      {{"edgepartition", "--k", "3", "--seed", "5", graph, "-o", o}},
      {{"map", "--hierarchy", "2:2:2:2", "--seed", "5", comm, "-o", o}},
      {{"generate", "--n", "20000", "--d", "4", "--seed", "5", "--threads", "1", "-o", o},
       {"generate", "--n", "20000", "--d", "4", "--seed", "5", "--threads", "6", "-o", o}},
      {{"generate", "--n", "5000", "--d", "2", "--simplify", "--threads", "1", "-o", o},
       {"generate", "--n", "5000", "--d", "2", "--simplify", "--threads", "3", "-o", o}},
  };
  int identical = 0, total = 0;
  std::string failed;
  for (const auto& variant : variants) {
    const std::string first = artifacts(variant.front(), out);
    const std::string second = artifacts(variant.back(), out);
    ++total;
    if (first == second && first.starts_with("0\n")) {
      ++identical;
    } else {
      failed += " " + variant.front().front();
    }
  }
  // evaluate: reuse the last partition file.
  artifacts(variants[0].front(), out);
  const fs::path solution = dir / "solution";
  fs::copy_file(out, solution, fs::copy_options::overwrite_existing);
  const std::vector<std::string> eval{"evaluate", "--type", "partition", "--k", "4",
                                      graph, solution.string()};
  ++total;
  if (artifacts(eval, out) == artifacts(eval, out)) {
    ++identical;
  } else {
    failed += " evaluate";
  }
  fs::remove_all(dir);
  return {identical == total,
          fmt("%d/%d subcommand runs byte-identical (generate with 1 vs 6 and 1 vs 3 threads)%s",
              identical, total, failed.empty() ? "" : (" failed:" + failed).c_str())};
}

}  // namespace
}  // namespace mlgp

int main() {
  using mlgp::Outcome;
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"balance soundness", mlgp::balance_soundness},
      {"brute-force cut parity", mlgp::brute_force_cut_parity},
      {"combine dominance", mlgp::combine_dominance},
      {"separator flow optimality", mlgp::flow_optimality},
      {"separator end-to-end", mlgp::separator_end_to_end},
      {"split-and-connect structure", mlgp::spac_structure},
      {"BA generator laws", mlgp::ba_laws},
      {"process mapping", mlgp::mapping_quality},
      {"monotonicity audit", mlgp::monotonicity_audit},
      {"CLI determinism", mlgp::cli_determinism},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failures += !outcome.pass;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << index << " (" << name
              << "): " << outcome.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
