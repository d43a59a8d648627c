// Copyright 2026 The subq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "subq/types.hpp"

namespace subq {

constexpr unsigned kDefaultLineWidth = 16;

/// Request accounting. Counters only grow within a run.
struct MemStats {
  std::uint64_t line_requests = 0;
  std::uint64_t pointer_requests = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t cache_misses = 0;

  std::uint64_t total_requests() const { return line_requests + pointer_requests; }
  double hit_rate() const {
    const auto lookups = cache_hits + cache_misses;
    return lookups ? static_cast<double>(cache_hits) / static_cast<double>(lookups) : 0.0;
  }

  MemStats& operator+=(const MemStats& o) {
    line_requests += o.line_requests;
    pointer_requests += o.pointer_requests;
    cache_hits += o.cache_hits;
    cache_misses += o.cache_misses;
    return *this;
  }
  friend MemStats operator+(MemStats a, const MemStats& b) { return a += b; }
  friend bool operator==(const MemStats&, const MemStats&) = default;
};

/// Number of width-aligned memory lines overlapping [left, left + size).
inline std::uint64_t line_span(std::uint64_t left, std::uint64_t size, unsigned width) {
  if (size == 0) return 0;
  return (left + size - 1) / width - left / width + 1;
}

/// One memory line as seen by an intersect operator: the valid elements only.
struct Line {
  std::span<const VertexId> elements;

  std::size_t valid_count() const { return elements.size(); }
  /// Largest valid element, which is the last one since lines are ascending.
  VertexId line_max() const { return elements.back(); }
};

/// Ascending values cut into lines. The first line ends at the first width
/// boundary after the slice start (memory alignment), the rest are full width.
class LineStream {
 public:
  LineStream() = default;
  /// `first_width` is the number of values in the first line (1..width).
  LineStream(std::span<const VertexId> values, unsigned width, unsigned first_width)
      : values_(values), width_(width), first_width_(first_width) {}

  /// Stream over a slice that started at absolute memory offset `left`.
  static LineStream aligned_at(std::span<const VertexId> values, Offset left, unsigned width) {
    return LineStream(values, width, width - left % width);
  }
  /// Lines packed from offset zero, as for intermediate results.
  static LineStream packed(std::span<const VertexId> values, unsigned width) {
    return LineStream(values, width, width);
  }

  bool empty() const { return pos_ >= values_.size(); }
  std::span<const VertexId> values() const { return values_; }
  unsigned width() const { return width_; }

  std::size_t num_lines() const {
    if (values_.empty()) return 0;
    if (values_.size() <= first_width_) return 1;
    return 1 + (values_.size() - first_width_ + width_ - 1) / width_;
  }

  /// Current line; requires !empty().
  Line current() const { return {values_.subspan(pos_, current_len())}; }
  void advance() { pos_ += current_len(); }
  void rewind() { pos_ = 0; }

 private:
  std::size_t current_len() const {
    const std::size_t limit = pos_ < first_width_ ? first_width_ : pos_ + width_ - (pos_ - first_width_) % width_;
    return std::min(limit, values_.size()) - pos_;
  }

  std::span<const VertexId> values_;
  unsigned width_ = kDefaultLineWidth;
  unsigned first_width_ = kDefaultLineWidth;
  std::size_t pos_ = 0;
};

/// Read-only view of the addressable arrays.
struct Memory {
  std::array<std::span<const VertexId>, 5> arrays{};

  std::span<const VertexId> operator[](ArrayId id) const { return arrays[static_cast<std::size_t>(id)]; }
  std::span<const VertexId>& operator[](ArrayId id) { return arrays[static_cast<std::size_t>(id)]; }
};

/// Which counter a fetcher charges its memory lines to.
enum class RequestKind : std::uint8_t { Neighbors, Pointers };

/// Single-entry fetch cache. Remembers the most recent request and its data;
/// a request hits iff array, left bound and size all match.
class FetchCache {
 public:
  explicit FetchCache(bool enabled = true) : enabled_(enabled) {}

  bool enabled() const { return enabled_; }
  bool valid() const { return valid_; }
  const SetRef& last() const { return last_; }
  std::span<const VertexId> stored() const { return stored_; }

  bool hits(const SetRef& request) const { return enabled_ && valid_ && request == last_; }
  void store(const SetRef& request, std::span<const VertexId> data) {
    last_ = request;
    stored_.assign(data.begin(), data.end());
    valid_ = true;
  }
  void invalidate() { valid_ = false; }

 private:
  bool enabled_ = true;
  bool valid_ = false;
  SetRef last_{};
  std::vector<VertexId> stored_;
};

/// Fetches a set as a line stream, through the cache.
///
/// Hit: one cache hit, no memory lines, data served from the cache.
/// Miss: one cache miss, line_span(left, size) lines charged to the counter
/// picked by `kind`, and the cache replaced by this request (when enabled).
/// Empty requests touch neither memory nor the cache.
/// The returned stream views either memory or the cache, so it is valid
/// until the next fetch through the same cache.
LineStream fetch(const SetRef& set, const Memory& memory, FetchCache& cache, MemStats& stats,
                 unsigned width = kDefaultLineWidth, RequestKind kind = RequestKind::Neighbors);

}  // namespace subq
