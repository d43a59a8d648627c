// Copyright 2026 The subq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "subq/fetch.hpp"
#include "subq/graph.hpp"
#include "subq/intersect.hpp"
#include "subq/query.hpp"

namespace subq {

/// Metadata direction of a slot; None while the vertex waits for its pointers.
enum class MetaDir : std::uint8_t { None, Out, In };

inline MetaDir meta_of(Direction d) { return d == Direction::Out ? MetaDir::Out : MetaDir::In; }

struct Slot {
  VertexId vertex = 0;
  Offset left = 0;
  Offset size = 0;
  MetaDir dir = MetaDir::None;
};

/// Partial matching: one slot per matched query vertex, in ordering order.
struct PartialMatching {
  std::array<Slot, kSlotCapacity> slots{};
  std::uint8_t level = 0;

  std::span<const Slot> filled() const { return {slots.data(), level}; }
};

/// Complete matchings (vertex ids only, in ordering order) plus the count.
struct ResultSet {
  unsigned width = 0;
  std::vector<VertexId> flat;
  std::uint64_t count = 0;

  std::size_t size() const { return width ? flat.size() / width : 0; }
  std::span<const VertexId> tuple(std::size_t i) const { return {flat.data() + i * width, width}; }
  /// Tuples as vectors, for comparisons in tests and reports.
  std::vector<std::vector<VertexId>> tuples() const;
};

/// Engine knobs shared by every instance of a run.
struct InstanceConfig {
  VertexInterval interval;
  bool caching = true;
  bool pruning = true;
  bool count_only = false;
  unsigned line_width = kDefaultLineWidth;
  unsigned max_levels = kDefaultMaxLevels;
  /// Matchings buffered between two pipeline stages.
  std::size_t buffer_size = 32;
};

struct RunStats {
  VertexInterval interval;
  /// intermediates[0]: matchings leaving source + filter; intermediates[i]:
  /// matchings leaving extender i. The last entry is the result count.
  std::vector<std::uint64_t> intermediates;
  /// Edges read by the matching source before filtering.
  std::uint64_t source_edges = 0;
  MemStats source_mem;
  /// Memory traffic of each extender.
  std::vector<MemStats> extender_mem;
  double elapsed_seconds = 0.0;

  MemStats total_mem() const;
};

struct InstanceOutput {
  ResultSet results;
  RunStats stats;
};

/// Memory view over the four CSR arrays of a graph.
Memory memory_of(const CsrGraph& g);

/// Parameters of the matching filter.
struct FilterParams {
  /// Slots whose neighborhood is read by the next intersection; empty ones discard.
  std::span<const SlotRef> needed;
  /// Slots whose freshly loaded metadata is checked against `thresholds`.
  std::span<const std::uint8_t> pruned_slots;
  /// Per-slot thresholds; empty disables pruning.
  std::span<const DegreeThreshold> thresholds;
  /// Discard when the newest vertex repeats an earlier one.
  bool distinct_check = false;
};

/// True when the matching survives the filter.
bool matching_filter(const PartialMatching& m, const FilterParams& params);

/// Level-2 matchings for every edge leaving the interval in the source
/// direction; slot 1 is left without metadata. Charges the sequential
/// pointer and neighbor scans to `stats`.
std::vector<PartialMatching> matching_source(const CsrGraph& g, const QueryPlan& plan, VertexInterval interval,
                                             MemStats& stats, unsigned line_width = kDefaultLineWidth);

/// Loads pointers v and v+1 for each refetch slot whose metadata direction
/// differs; requests go through `cache` and count as pointer requests.
void pointer_fetch(PartialMatching& m, std::span<const SlotRef> refetch, const CsrGraph& g, FetchCache& cache,
                   MemStats& stats, unsigned line_width = kDefaultLineWidth);

/// Fetch caches owned by one extender: one per refetch entry, one per
/// intersector input.
struct ExtenderCaches {
  std::vector<FetchCache> pointer;
  std::vector<FetchCache> sets;

  ExtenderCaches() = default;
  ExtenderCaches(const ExtensionStep& step, bool enabled);
};

/// One extender applied to a batch of level-`step.level` matchings.
std::vector<PartialMatching> matching_extender(std::span<const PartialMatching> in, const ExtensionStep& step,
                                               const QueryPlan& plan, const CsrGraph& g, ExtenderCaches& caches,
                                               MemStats& stats, const InstanceConfig& cfg);

/// Strips metadata and appends complete matchings (or only counts them).
void matching_sink(std::span<const PartialMatching> in, bool count_only, ResultSet& out);

/// Source, filter, (num_levels - 2) extenders and sink over one vertex interval.
/// Throws ConfigError when the plan needs more levels than cfg.max_levels or
/// an undirected plan meets an asymmetric graph.
InstanceOutput run_instance(const CsrGraph& g, const QueryPlan& plan, const InstanceConfig& cfg);

struct ParallelOutput {
  /// Results in original vertex ids, concatenated in instance order.
  ResultSet results;
  std::vector<RunStats> instances;
  double elapsed_seconds = 0.0;
};

/// Runs p isolated instances over a stride-mapped, partitioned copy of the
/// graph (stride mapping only when p > 1). Undirected plans symmetrize the
/// graph first. cfg.interval is ignored.
ParallelOutput run_parallel(const CsrGraph& g, const QueryPlan& plan, unsigned p, VertexId stride,
                            const InstanceConfig& cfg);

/// Rewrites tuples from ordering order into query-vertex order.
std::vector<std::vector<VertexId>> to_query_order(const ResultSet& r, const Qvo& qvo);

/// Interval of max(1, n/10) vertices at a seeded random offset.
VertexInterval sample_interval(VertexId num_vertices, std::uint64_t seed);

/// Samples a vertex interval, runs every candidate ordering (up to `budget`)
/// on it and returns the one producing the fewest intermediate matchings.
/// Experimental.
Qvo choose_best_qvo(const QueryGraph& q, const CsrGraph& g, std::size_t budget, std::uint64_t seed = 42);

}  // namespace subq
