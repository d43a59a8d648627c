// Copyright 2026 The subq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>

#include "subq/fetch.hpp"

namespace subq {

// Analytic memory-request model of the matching pipeline. `l` is the number
// of 32-bit values per memory line.

/// Requests to materialize the initial edges: every pointer and every
/// neighbor read once, sequentially: ceil((|V|+1)/l) + ceil(|E|/l).
std::uint64_t initial_requests(std::uint64_t num_vertices, std::uint64_t num_edges, unsigned l);

/// Requests of one extension: f*m pointer-pair lines plus, for each of the s
/// intersected sets, m * D_avg / min(l, D_avg) neighbor lines.
/// Throws ModelError when d_avg is not positive or l is zero.
double extension_requests(double f, double m, double s, double d_avg, unsigned l);

class ModelError : public Error {
 public:
  using Error::Error;
};

struct ModelComparison {
  double measured = 0;
  double predicted = 0;
  /// |measured - predicted| / predicted; absent when predicted is zero.
  std::optional<double> relative_error;
  double tolerance = 0;
  bool pass = false;
  /// predicted == 0 but traffic was measured.
  bool flagged = false;
};

ModelComparison compare_model(double measured, double predicted, double tolerance);

}  // namespace subq
