// Copyright 2026 The subq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "subq/engine.hpp"
#include "subq/perf_model.hpp"

namespace subq {

/// One tuple per line, dense ids separated by single spaces.
void write_tuples(const ResultSet& results, std::ostream& out);

/// Settings echoed into a run report.
struct RunDescription {
  MatchMode mode = MatchMode::Isomorphism;
  bool directed = true;
  Qvo qvo;
  unsigned instances = 1;
  VertexId stride = 1;
  bool caching = true;
  bool pruning = true;
  unsigned line_width = kDefaultLineWidth;
};

/// Key-value run report ("key: value" per line). Keys ending in
/// elapsed_seconds carry wall-clock time; everything else is deterministic.
void write_run_report(const RunDescription& run, const ParallelOutput& output, std::ostream& out);

/// Predicted versus measured traffic of one pipeline stage.
struct StageEstimate {
  std::string stage;  // "source" or "extend.<level>"
  double f = 0, m = 0, s = 0;
  ModelComparison comparison;
};

struct EstimateReport {
  std::uint64_t num_vertices = 0;
  std::uint64_t num_edges = 0;
  double avg_degree = 0;
  unsigned line_width = kDefaultLineWidth;
  std::vector<StageEstimate> stages;
};

/// Runs one instance over the whole graph with caching disabled and compares
/// the measured requests of every stage with the analytic model. f is the
/// number of refetched slots of a step, s its intersection fan-in and m the
/// number of matchings entering it.
EstimateReport estimate_run(const CsrGraph& g, const QueryPlan& plan, InstanceConfig cfg, double tolerance);

void write_estimate_report(const EstimateReport& report, std::ostream& out);

}  // namespace subq
