// Copyright 2026 The subq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "subq/fetch.hpp"

namespace subq {

/// Maximum number of sets one AllCompare intersector combines (four fetchers).
constexpr unsigned kMaxIntersectInputs = 4;

using ValueSet = std::span<const VertexId>;

/// Throws ContractViolation unless `values` is strictly ascending.
void require_strictly_ascending(ValueSet values);

/// Reference k-way merge intersection (k >= 1).
std::vector<VertexId> merge_intersect(std::span<const ValueSet> sets);

struct LeapfrogResult {
  std::vector<VertexId> values;
  /// Search-and-sync rounds.
  std::uint64_t steps = 0;
};

/// LeapFrog intersection of 2..kMaxIntersectInputs sets.
///
/// Each round every set drops the elements below the search item; when all
/// heads equal the search item it is emitted and consumed. The next search
/// item is the largest head. Stops as soon as any set runs dry.
LeapfrogResult leapfrog_intersect(std::span<const ValueSet> sets);

/// Intersects two line streams by comparing whole lines against each other.
///
/// Every compare step emits the values both current lines share, then drops
/// the line with the smaller maximum (both on a tie). When either stream is
/// exhausted the other one is flushed. Appends results to `out` and returns
/// the number of compare steps.
std::uint64_t allcompare_pair(LineStream a, LineStream b, std::vector<VertexId>& out);

struct AllCompareResult {
  std::vector<VertexId> values;
  /// Compare steps of each pairwise stage of the chain.
  std::vector<std::uint64_t> stage_steps;
  /// Steps of the slowest stage; stages run concurrently as a pipeline.
  std::uint64_t compare_steps = 0;
};

/// k-way AllCompare: a chain of pairwise stages, where stage i intersects the
/// running intermediate result (re-cut into packed lines) with input i + 1.
/// k must lie in [2, kMaxIntersectInputs]; otherwise ConfigError.
AllCompareResult allcompare_intersect(std::span<const LineStream> sets, unsigned width = kDefaultLineWidth);

/// Same, fetching each input through its own cached fetcher.
AllCompareResult allcompare_intersect(std::span<const SetRef> sets, const Memory& memory,
                                      std::span<FetchCache> fetchers, MemStats& stats,
                                      unsigned width = kDefaultLineWidth);

}  // namespace subq
