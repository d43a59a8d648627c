// Copyright 2026 The subq Authors
// SPDX-License-Identifier: Apache-2.0

#include "subq/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace subq {

namespace {

std::string fixed(double v, int digits = 6) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(digits) << v;
  return ss.str();
}

std::string joined(const std::vector<std::uint64_t>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(values[i]);
  }
  return s;
}

void write_mem(std::ostream& out, const std::string& prefix, const MemStats& m) {
  out << prefix << "line_requests: " << m.line_requests << '\n';
  out << prefix << "pointer_requests: " << m.pointer_requests << '\n';
  out << prefix << "cache_hits: " << m.cache_hits << '\n';
  out << prefix << "cache_misses: " << m.cache_misses << '\n';
  out << prefix << "cache_hit_rate: " << fixed(m.hit_rate()) << '\n';
}

}  // namespace

void write_tuples(const ResultSet& results, std::ostream& out) {
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto t = results.tuple(i);
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (j) out << ' ';
      out << t[j];
    }
    out << '\n';
  }
}

void write_run_report(const RunDescription& run, const ParallelOutput& output, std::ostream& out) {
  std::vector<std::uint64_t> intermediates;
  MemStats total;
  for (const auto& inst : output.instances) {
    if (intermediates.size() < inst.intermediates.size()) intermediates.resize(inst.intermediates.size(), 0);
    for (std::size_t i = 0; i < inst.intermediates.size(); ++i) intermediates[i] += inst.intermediates[i];
    total += inst.total_mem();
  }
  out << "matchings: " << output.results.count << '\n';
  out << "mode: " << to_string(run.mode) << '\n';
  out << "directed: " << (run.directed ? "true" : "false") << '\n';
  out << "qvo: " << to_string(run.qvo) << '\n';
  out << "instances: " << run.instances << '\n';
  out << "stride: " << run.stride << '\n';
  out << "caching: " << (run.caching ? "on" : "off") << '\n';
  out << "pruning: " << (run.pruning ? "on" : "off") << '\n';
  out << "line_width: " << run.line_width << '\n';
  out << "intermediates: " << joined(intermediates) << '\n';
  write_mem(out, "", total);
  out << "elapsed_seconds: " << fixed(output.elapsed_seconds) << '\n';
  for (std::size_t i = 0; i < output.instances.size(); ++i) {
    const auto& inst = output.instances[i];
    const std::string prefix = "instance." + std::to_string(i) + ".";
    out << prefix << "interval: " << inst.interval.lo << ' ' << inst.interval.hi << '\n';
    out << prefix << "source_edges: " << inst.source_edges << '\n';
    out << prefix << "intermediates: " << joined(inst.intermediates) << '\n';
    write_mem(out, prefix, inst.total_mem());
    out << prefix << "elapsed_seconds: " << fixed(inst.elapsed_seconds) << '\n';
  }
}

EstimateReport estimate_run(const CsrGraph& graph, const QueryPlan& plan, InstanceConfig cfg, double tolerance) {
  const CsrGraph sym = (!plan.directed && !graph.symmetric()) ? make_undirected(graph) : CsrGraph();
  const CsrGraph& g = (!plan.directed && !graph.symmetric()) ? sym : graph;
  cfg.caching = false;
  cfg.interval = {0, g.num_vertices()};
  const auto run = run_instance(g, plan, cfg);

  EstimateReport report;
  report.num_vertices = g.num_vertices();
  report.num_edges = g.num_edges();
  report.avg_degree = g.num_vertices() ? static_cast<double>(g.num_edges()) / g.num_vertices() : 0.0;
  report.line_width = cfg.line_width;

  StageEstimate source;
  source.stage = "source";
  source.comparison = compare_model(static_cast<double>(run.stats.source_mem.total_requests()),
                                    static_cast<double>(initial_requests(g.num_vertices(), g.num_edges(),
                                                                         cfg.line_width)),
                                    tolerance);
  report.stages.push_back(source);

  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const auto& step = plan.steps[i];
    StageEstimate e;
    e.stage = "extend." + std::to_string(step.level);
    e.f = static_cast<double>(step.refetch.size());
    e.s = static_cast<double>(step.intersect_inputs.size());
    e.m = static_cast<double>(run.stats.intermediates[i]);
    const double predicted =
        report.avg_degree > 0 ? extension_requests(e.f, e.m, e.s, report.avg_degree, cfg.line_width) : 0.0;
    e.comparison =
        compare_model(static_cast<double>(run.stats.extender_mem[i].total_requests()), predicted, tolerance);
    report.stages.push_back(e);
  }
  return report;
}

void write_estimate_report(const EstimateReport& report, std::ostream& out) {
  out << "vertices: " << report.num_vertices << '\n';
  out << "edges: " << report.num_edges << '\n';
  out << "avg_degree: " << fixed(report.avg_degree) << '\n';
  out << "line_width: " << report.line_width << '\n';
  for (const auto& s : report.stages) {
    const std::string prefix = "stage." + s.stage + ".";
    if (s.stage != "source") {
      out << prefix << "f: " << fixed(s.f, 0) << '\n';
      out << prefix << "m: " << fixed(s.m, 0) << '\n';
      out << prefix << "s: " << fixed(s.s, 0) << '\n';
    }
    out << prefix << "predicted: " << fixed(s.comparison.predicted, 2) << '\n';
    out << prefix << "measured: " << fixed(s.comparison.measured, 0) << '\n';
    out << prefix << "relative_error: "
        << (s.comparison.relative_error ? fixed(*s.comparison.relative_error) : std::string("undefined")) << '\n';
    out << prefix << "pass: " << (s.comparison.pass ? "true" : "false") << '\n';
    if (s.comparison.flagged) out << prefix << "flagged: true\n";
  }
}

}  // namespace subq
