// Copyright 2026 The subq Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line driver: run, oracle, bench-intersect, estimate, qvos, convert.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "subq/bench.hpp"
#include "subq/engine.hpp"
#include "subq/graph.hpp"
#include "subq/oracle.hpp"
#include "subq/query.hpp"
#include "subq/report.hpp"

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kIo = 2, kParse = 3, kQuery = 4, kConfig = 5, kInternal = 6 };

struct QueryOptions {
  std::string graph;
  std::string query;
  std::string mode;
  std::string directed;
  std::string qvo;
  std::size_t optimize = 0;
  std::uint64_t seed = 42;
};

struct RunOptions {
  QueryOptions q;
  unsigned instances = 4;
  subq::VertexId stride = 100;
  bool no_caching = false;
  bool no_pruning = false;
  bool count_only = false;
  unsigned line_width = subq::kDefaultLineWidth;
  std::string output;
};

void add_query_options(CLI::App* cmd, QueryOptions& o) {
  cmd->add_option("-g,--graph", o.graph, "Data graph (edge list or binary dump)")->required();
  cmd->add_option("-q,--query", o.query, "Query file")->required();
  cmd->add_option("--mode", o.mode, "Override match mode")->check(CLI::IsMember({"hom", "iso"}));
  cmd->add_option("--directed", o.directed, "Override query directedness")->check(CLI::IsMember({"true", "false"}));
  cmd->add_option("--qvo", o.qvo, "Query vertex ordering, e.g. 0,2,1");
  cmd->add_option("--optimize-qvo", o.optimize, "Pick the cheapest of the first N orderings on a sampled interval");
  cmd->add_option("--seed", o.seed, "Seed for sampling")->capture_default_str();
}

struct Loaded {
  subq::CsrGraph graph;
  subq::QueryGraph query;
  subq::Qvo qvo;
};

Loaded load(const QueryOptions& o, unsigned max_levels = subq::kDefaultMaxLevels) {
  Loaded l;
  auto file = subq::load_query_file(o.query, max_levels);
  l.query = file.graph;
  if (!o.mode.empty()) l.query.mode = subq::parse_match_mode(o.mode);
  if (!o.directed.empty() && (o.directed == "true") != l.query.directed) {
    std::vector<std::pair<unsigned, unsigned>> edges(l.query.edges.begin(), l.query.edges.end());
    l.query = subq::parse_query(edges, o.directed == "true", l.query.mode, max_levels);
  }
  l.graph = subq::load_graph_file(o.graph);
  if (!o.qvo.empty()) {
    l.qvo = subq::parse_qvo(o.qvo);
    if (!subq::is_valid_qvo(l.query, l.qvo))
      throw subq::QueryError("query vertex ordering " + o.qvo + " is not valid for this query");
  } else if (o.optimize > 0) {
    l.qvo = subq::choose_best_qvo(l.query, l.graph, o.optimize, o.seed);
  } else if (file.qvo && subq::is_valid_qvo(l.query, *file.qvo)) {
    l.qvo = *file.qvo;
  } else {
    l.qvo = subq::default_qvo(l.query);
  }
  return l;
}

void emit_tuples(const std::string& path, const subq::ResultSet& results) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw subq::IoError("cannot write " + path);
  subq::write_tuples(results, out);
}

int cmd_run(const RunOptions& o) {
  const auto l = load(o.q);
  const auto plan = subq::plan_query(l.query, l.qvo);
  subq::InstanceConfig cfg;
  cfg.caching = !o.no_caching;
  cfg.pruning = !o.no_pruning;
  cfg.count_only = o.count_only && o.output.empty();
  cfg.line_width = o.line_width;
  const auto out = subq::run_parallel(l.graph, plan, o.instances, o.stride, cfg);
  subq::RunDescription desc{l.query.mode, l.query.directed, l.qvo, o.instances, o.stride,
                            cfg.caching,  cfg.pruning,      o.line_width};
  subq::write_run_report(desc, out, std::cout);
  emit_tuples(o.output, out.results);
  return kOk;
}

int cmd_oracle(const QueryOptions& o, const std::string& output) {
  const auto l = load(o);
  const auto results = subq::enumerate(l.graph, l.query, l.qvo);
  std::cout << "matchings: " << results.count << '\n';
  std::cout << "mode: " << subq::to_string(l.query.mode) << '\n';
  std::cout << "directed: " << (l.query.directed ? "true" : "false") << '\n';
  std::cout << "qvo: " << subq::to_string(l.qvo) << '\n';
  emit_tuples(output, results);
  return kOk;
}

int cmd_estimate(const QueryOptions& o, unsigned line_width, double tolerance) {
  const auto l = load(o);
  const auto plan = subq::plan_query(l.query, l.qvo);
  subq::InstanceConfig cfg;
  cfg.line_width = line_width;
  cfg.count_only = true;
  const auto report = subq::estimate_run(l.graph, plan, cfg, tolerance);
  std::cout << "qvo: " << subq::to_string(l.qvo) << '\n';
  subq::write_estimate_report(report, std::cout);
  return kOk;
}

int cmd_qvos(const std::string& query_path) {
  const auto file = subq::load_query_file(query_path, subq::kSlotCapacity);
  for (const auto& qvo : subq::enumerate_qvos(file.graph)) {
    std::cout << subq::to_string(qvo);
    try {
      const auto plan = subq::plan_query(file.graph, qvo);
      std::size_t refetch = 0;
      for (const auto& s : plan.steps) refetch += s.refetch.size();
      std::cout << " refetch=" << refetch << '\n';
    } catch (const subq::QueryError&) {
      std::cout << " unplannable\n";
    }
  }
  return kOk;
}

int cmd_convert(const std::string& in, const std::string& out, bool undirected) {
  const auto g = subq::build_csr(subq::load_edge_list_file(in, !undirected));
  std::ofstream f(out, std::ios::binary);
  if (!f) throw subq::IoError("cannot write " + out);
  subq::write_csr_binary(g, f);
  if (!f) throw subq::IoError("write failed: " + out);
  std::cout << "vertices: " << g.num_vertices() << "\nedges: " << g.num_edges() << '\n';
  return kOk;
}

int cmd_bench(const subq::BenchConfig& cfg, const std::string& kernel, const std::string& output) {
  subq::BenchConfig c = cfg;
  c.kernel = subq::parse_kernel(kernel);
  const auto rows = subq::bench_intersect(c);
  if (output.empty()) {
    subq::write_bench_csv(rows, std::cout);
  } else {
    std::ofstream f(output);
    if (!f) throw subq::IoError("cannot write " + output);
    subq::write_bench_csv(rows, f);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subgraph matching engine with a line-granular memory model"};
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Enumerate matchings with the pipelined engine");
  add_query_options(run_cmd, run.q);
  run_cmd->add_option("-p,--instances", run.instances, "Engine instances")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  run_cmd->add_option("--stride", run.stride, "Stride of the vertex relabeling")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  run_cmd->add_flag("--no-caching", run.no_caching, "Disable input-set caching");
  run_cmd->add_flag("--no-pruning", run.no_pruning, "Disable failing-set pruning");
  run_cmd->add_flag("--count-only", run.count_only, "Count without materializing tuples");
  run_cmd->add_option("-L,--line-width", run.line_width, "Values per memory line")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  run_cmd->add_option("-o,--output", run.output, "Write tuples (ordering layout) to this file");

  QueryOptions oracle;
  std::string oracle_output;
  auto* oracle_cmd = app.add_subcommand("oracle", "Enumerate matchings by brute force (small graphs only)");
  add_query_options(oracle_cmd, oracle);
  oracle_cmd->add_option("-o,--output", oracle_output, "Write tuples (ordering layout) to this file");

  QueryOptions est;
  unsigned est_width = subq::kDefaultLineWidth;
  double tolerance = 0.25;
  auto* est_cmd = app.add_subcommand("estimate", "Compare predicted and measured memory requests per stage");
  add_query_options(est_cmd, est);
  est_cmd->add_option("-L,--line-width", est_width, "Values per memory line")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  est_cmd->add_option("--tolerance", tolerance, "Relative tolerance of extension stages")->capture_default_str();

  std::string qvo_query;
  auto* qvos_cmd = app.add_subcommand("qvos", "List valid query vertex orderings");
  qvos_cmd->add_option("-q,--query", qvo_query, "Query file")->required();

  std::string conv_in, conv_out;
  bool conv_undirected = false;
  auto* conv_cmd = app.add_subcommand("convert", "Convert an edge list into a binary CSR dump");
  conv_cmd->add_option("input", conv_in, "Edge list")->required();
  conv_cmd->add_option("output", conv_out, "Binary dump")->required();
  conv_cmd->add_flag("--undirected", conv_undirected, "Treat each edge as both directions");

  subq::BenchConfig bench;
  std::string kernel = "allcompare";
  std::string bench_output;
  auto* bench_cmd = app.add_subcommand("bench-intersect", "Sweep synthetic set intersections, emit CSV");
  bench_cmd->add_option("--kernel", kernel, "allcompare, leapfrog or merge")
      ->check(CLI::IsMember({"allcompare", "leapfrog", "merge"}))
      ->capture_default_str();
  bench_cmd->add_option("--sizes", bench.sizes, "Set sizes")->delimiter(',');
  bench_cmd->add_option("--overlaps", bench.overlaps, "Common fraction of each set, in [0, 1]")->delimiter(',');
  bench_cmd->add_option("-k,--fan-in", bench.fan_ins, "Number of input sets, in [2, 4]")->delimiter(',');
  bench_cmd->add_option("--hit-rates", bench.hit_rates, "Fraction of repeated requests, in [0, 1]")->delimiter(',');
  bench_cmd->add_option("-L,--line-width", bench.line_width, "Values per memory line")->capture_default_str();
  bench_cmd->add_option("-n,--repetitions", bench.repetitions, "Intersections per row")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Seed")->capture_default_str();
  bench_cmd->add_option("-o,--output", bench_output, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*run_cmd) return cmd_run(run);
    if (*oracle_cmd) return cmd_oracle(oracle, oracle_output);
    if (*est_cmd) return cmd_estimate(est, est_width, tolerance);
    if (*qvos_cmd) return cmd_qvos(qvo_query);
    if (*conv_cmd) return cmd_convert(conv_in, conv_out, conv_undirected);
    if (*bench_cmd) return cmd_bench(bench, kernel, bench_output);
  } catch (const subq::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const subq::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const subq::QueryError& e) {
    std::cerr << "query error: " << e.what() << '\n';
    return kQuery;
  } catch (const subq::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const subq::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
