// Copyright 2026 The subq Authors
// SPDX-License-Identifier: Apache-2.0

#include "subq/fetch.hpp"

namespace subq {

LineStream fetch(const SetRef& set, const Memory& memory, FetchCache& cache, MemStats& stats, unsigned width,
                 RequestKind kind) {
  if (width == 0) throw ConfigError("line width must be at least 1");
  if (set.size == 0) return LineStream::aligned_at({}, set.left, width);

  if (cache.hits(set)) {
    ++stats.cache_hits;
    return LineStream::aligned_at(cache.stored(), set.left, width);
  }

  const auto array = memory[set.array];
  if (static_cast<std::uint64_t>(set.left) + set.size > array.size())
    throw ContractViolation("fetch request exceeds array bounds");
  ++stats.cache_misses;
  const auto lines = line_span(set.left, set.size, width);
  (kind == RequestKind::Pointers ? stats.pointer_requests : stats.line_requests) += lines;

  const auto data = array.subspan(set.left, set.size);
  if (!cache.enabled()) return LineStream::aligned_at(data, set.left, width);
  cache.store(set, data);
  return LineStream::aligned_at(cache.stored(), set.left, width);
}

}  // namespace subq
