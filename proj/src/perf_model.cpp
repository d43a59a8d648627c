// Copyright 2026 The subq Authors
// SPDX-License-Identifier: Apache-2.0

#include "subq/perf_model.hpp"

#include <algorithm>
#include <cmath>

namespace subq {

std::uint64_t initial_requests(std::uint64_t num_vertices, std::uint64_t num_edges, unsigned l) {
  if (l == 0) throw ModelError("line width must be at least 1");
  auto ceil_div = [l](std::uint64_t x) { return (x + l - 1) / l; };
  return ceil_div(num_vertices + 1) + ceil_div(num_edges);
}

double extension_requests(double f, double m, double s, double d_avg, unsigned l) {
  if (l == 0) throw ModelError("line width must be at least 1");
  if (!(d_avg > 0)) throw ModelError("average degree must be positive");
  return f * m + s * (m * d_avg / std::min(static_cast<double>(l), d_avg));
}

ModelComparison compare_model(double measured, double predicted, double tolerance) {
  ModelComparison c;
  c.measured = measured;
  c.predicted = predicted;
  c.tolerance = tolerance;
  if (predicted == 0) {
    c.flagged = measured > 0;
    c.pass = measured == 0;
    if (measured == 0) c.relative_error = 0.0;
    return c;
  }
  c.relative_error = std::abs(measured - predicted) / predicted;
  c.pass = *c.relative_error <= tolerance;
  return c;
}

}  // namespace subq
