// Copyright 2026 The subq Authors
// SPDX-License-Identifier: Apache-2.0

#include "subq/intersect.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <string>

namespace subq {

namespace {

void require_fan_in(std::size_t k) {
  if (k < 2 || k > kMaxIntersectInputs)
    throw ConfigError("AllCompare fan-in must be in [2, " + std::to_string(kMaxIntersectInputs) + "], got " +
                      std::to_string(k));
}

// Tracks the previous line maximum of a stream so ordering across line
// boundaries is checked as lines are consumed.
struct CheckedLine {
  Line line;
  bool has_prev = false;
  VertexId prev_max = 0;

  void load(const LineStream& s) {
    line = s.current();
    const auto e = line.elements;
    if (has_prev && e.front() <= prev_max) throw ContractViolation("line stream not strictly ascending");
    for (std::size_t i = 1; i < e.size(); ++i)
      if (e[i - 1] >= e[i]) throw ContractViolation("line not strictly ascending");
  }
  void retire() {
    prev_max = line.line_max();
    has_prev = true;
  }
};

}  // namespace

void require_strictly_ascending(ValueSet values) {
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i - 1] >= values[i]) throw ContractViolation("set is not strictly ascending");
}

std::vector<VertexId> merge_intersect(std::span<const ValueSet> sets) {
  if (sets.empty()) throw ContractViolation("merge_intersect needs at least one set");
  for (const auto& s : sets) require_strictly_ascending(s);
  std::vector<VertexId> acc(sets[0].begin(), sets[0].end());
  std::vector<VertexId> next;
  for (std::size_t i = 1; i < sets.size() && !acc.empty(); ++i) {
    next.clear();
    std::set_intersection(acc.begin(), acc.end(), sets[i].begin(), sets[i].end(), std::back_inserter(next));
    acc.swap(next);
  }
  return acc;
}

LeapfrogResult leapfrog_intersect(std::span<const ValueSet> sets) {
  require_fan_in(sets.size());
  for (const auto& s : sets) require_strictly_ascending(s);

  LeapfrogResult result;
  std::array<std::size_t, kMaxIntersectInputs> head{};
  const std::size_t k = sets.size();
  VertexId search = 0;
  for (;;) {
    ++result.steps;
    // Search: discard everything below the search item.
    bool all_equal = true;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& s = sets[i];
      head[i] = static_cast<std::size_t>(std::lower_bound(s.begin() + head[i], s.end(), search) - s.begin());
      if (head[i] == s.size()) return result;
      all_equal = all_equal && s[head[i]] == search;
    }
    if (all_equal) {
      result.values.push_back(search);
      for (std::size_t i = 0; i < k; ++i)
        if (++head[i] == sets[i].size()) return result;
    }
    // Sync: the largest head becomes the next search item.
    VertexId next = 0;
    for (std::size_t i = 0; i < k; ++i) next = std::max(next, sets[i][head[i]]);
    search = next;
  }
}

std::uint64_t allcompare_pair(LineStream a, LineStream b, std::vector<VertexId>& out) {
  std::uint64_t steps = 0;
  CheckedLine la, lb;
  if (!a.empty()) la.load(a);
  if (!b.empty()) lb.load(b);
  while (!a.empty() && !b.empty()) {
    ++steps;
    const auto ea = la.line.elements;
    const auto eb = lb.line.elements;
    // All-to-all equality compare; a's line order gives ascending output.
    for (VertexId x : ea) {
      bool hit = false;
      for (VertexId y : eb) hit |= (x == y);
      if (hit) out.push_back(x);
    }
    const VertexId max_a = la.line.line_max();
    const VertexId max_b = lb.line.line_max();
    if (max_a <= max_b) {
      la.retire();
      a.advance();
      if (!a.empty()) la.load(a);
    }
    if (max_b <= max_a) {
      lb.retire();
      b.advance();
      if (!b.empty()) lb.load(b);
    }
  }
  // Whatever remains in the other stream cannot match anything: flushed.
  return steps;
}

AllCompareResult allcompare_intersect(std::span<const LineStream> sets, unsigned width) {
  require_fan_in(sets.size());
  if (width == 0) throw ConfigError("line width must be at least 1");
  AllCompareResult result;
  result.stage_steps.assign(sets.size() - 1, 0);

  std::vector<VertexId> intermediate;
  result.stage_steps[0] = allcompare_pair(sets[0], sets[1], intermediate);
  std::vector<VertexId> next;
  for (std::size_t i = 2; i < sets.size() && !intermediate.empty(); ++i) {
    next.clear();
    result.stage_steps[i - 1] = allcompare_pair(LineStream::packed(intermediate, width), sets[i], next);
    intermediate.swap(next);
  }
  result.values = std::move(intermediate);
  result.compare_steps = *std::max_element(result.stage_steps.begin(), result.stage_steps.end());
  return result;
}

AllCompareResult allcompare_intersect(std::span<const SetRef> sets, const Memory& memory,
                                      std::span<FetchCache> fetchers, MemStats& stats, unsigned width) {
  require_fan_in(sets.size());
  if (fetchers.size() < sets.size()) throw ConfigError("one fetcher per input set required");
  std::array<LineStream, kMaxIntersectInputs> streams;
  for (std::size_t i = 0; i < sets.size(); ++i) streams[i] = fetch(sets[i], memory, fetchers[i], stats, width);
  return allcompare_intersect(std::span<const LineStream>(streams.data(), sets.size()), width);
}

}  // namespace subq
