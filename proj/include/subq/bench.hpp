// Copyright 2026 The subq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "subq/fetch.hpp"

namespace subq {

enum class Kernel : std::uint8_t { AllCompare, LeapFrog, Merge };

const char* to_string(Kernel k);
Kernel parse_kernel(const std::string& text);

/// Synthetic intersection sweep. Every combination of size, overlap, fan-in
/// and cache-hit rate yields one row.
struct BenchConfig {
  Kernel kernel = Kernel::AllCompare;
  std::vector<unsigned> sizes{64};
  /// Fraction of each input set that is common to all sets (the output).
  std::vector<double> overlaps{0.0};
  std::vector<unsigned> fan_ins{2};
  /// Fraction of intersections that repeat the previous request.
  std::vector<double> hit_rates{0.0};
  unsigned line_width = kDefaultLineWidth;
  unsigned repetitions = 5000;
  std::uint64_t seed = 42;
};

struct BenchRow {
  Kernel kernel = Kernel::AllCompare;
  unsigned k = 2;
  unsigned set_size = 0;
  double overlap = 0;
  unsigned line_width = kDefaultLineWidth;
  double cache_hit_rate = 0;
  unsigned repetitions = 0;
  std::uint64_t outputs = 0;
  std::uint64_t compare_steps = 0;
  std::uint64_t max_compare_steps = 0;
  MemStats mem;
  double runtime_ms = 0;
};

/// Throws ConfigError for fan-in outside [2, 4], overlap outside [0, 1],
/// hit rate outside [0, 1] or zero sizes/repetitions.
std::vector<BenchRow> bench_intersect(const BenchConfig& config);

/// Versioned CSV: a "# subq bench-intersect v1" line, a header, one row each.
void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace subq
