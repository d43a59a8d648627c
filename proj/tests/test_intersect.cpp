// Copyright 2026 The subq Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "subq/fetch.hpp"
#include "subq/intersect.hpp"
#include "support.hpp"

namespace subq {
namespace {

using V = std::vector<VertexId>;

// Reference: values present in every set, by counting.
V count_intersect(const std::vector<V>& sets) {
  V out;
  for (VertexId x : sets[0]) {
    bool all = true;
    for (std::size_t i = 1; i < sets.size(); ++i) all = all && std::count(sets[i].begin(), sets[i].end(), x) == 1;
    if (all) out.push_back(x);
  }
  return out;
}

std::uint64_t line_bound(const std::vector<V>& sets, unsigned width) {
  std::uint64_t b = 0;
  for (const auto& s : sets) b += (s.size() + width - 1) / width;
  return b;
}

AllCompareResult allcompare(const std::vector<V>& sets, unsigned width) {
  std::vector<LineStream> streams;
  for (const auto& s : sets) streams.push_back(LineStream::packed(s, width));
  return allcompare_intersect(streams, width);
}

std::vector<ValueSet> views(const std::vector<V>& sets) { return {sets.begin(), sets.end()}; }

TEST(Merge, Examples) {
  const std::vector<V> a{{1, 3, 5}, {3, 5, 7}};
  EXPECT_EQ(merge_intersect(views(a)), (V{3, 5}));
  const std::vector<V> b{{1, 2}, {3, 4}};
  EXPECT_EQ(merge_intersect(views(b)), V{});
}

TEST(Merge, ExampleGraphNeighborhoods) {
  const auto g = testing::fig3();
  const std::vector<ValueSet> sets{g.adjacent(0, Direction::Out), g.adjacent(3, Direction::Out)};
  EXPECT_EQ(merge_intersect(sets), (V{1}));
}

TEST(Merge, RejectsUnsorted) {
  const std::vector<V> a{{3, 1}, {1}};
  EXPECT_THROW(merge_intersect(views(a)), ContractViolation);
}

TEST(Leapfrog, EqualSetsEmitEveryRound) {
  const V s{0, 1, 2, 3, 4, 5, 6, 7};
  const std::vector<V> sets{s, s};
  const auto r = leapfrog_intersect(views(sets));
  EXPECT_EQ(r.values, s);
  EXPECT_EQ(r.steps, 8u);
}

TEST(Leapfrog, SmallExample) {
  const std::vector<V> sets{{1, 3, 5}, {3, 5, 7}};
  EXPECT_EQ(leapfrog_intersect(views(sets)).values, (V{3, 5}));
}

TEST(Leapfrog, FanInLimits) {
  const std::vector<V> one{{1}};
  EXPECT_THROW(leapfrog_intersect(views(one)), ConfigError);
  const std::vector<V> five(5, V{1});
  EXPECT_THROW(leapfrog_intersect(views(five)), ConfigError);
}

TEST(AllCompare, DisjointInterleavedSingleStep) {
  const std::vector<V> sets{{0, 2, 4, 6}, {1, 3, 5, 7}};
  const auto r = allcompare(sets, 4);
  EXPECT_TRUE(r.values.empty());
  EXPECT_EQ(r.compare_steps, 1u);
}

TEST(AllCompare, IdenticalSingleLines) {
  const std::vector<V> sets{{2, 4, 8, 9}, {2, 4, 8, 9}};
  const auto r = allcompare(sets, 4);
  EXPECT_EQ(r.values, sets[0]);
  EXPECT_EQ(r.compare_steps, 1u);
}

TEST(AllCompare, ThreeWay) {
  const std::vector<V> sets{{1, 2, 3}, {2, 3, 4}, {3, 4, 5}};
  EXPECT_EQ(allcompare(sets, 16).values, (V{3}));
}

TEST(AllCompare, EmptyInputHasNoSteps) {
  const std::vector<V> sets{{1, 2, 3}, {}};
  const auto r = allcompare(sets, 16);
  EXPECT_TRUE(r.values.empty());
  EXPECT_EQ(r.compare_steps, 0u);
}

TEST(AllCompare, LargerMaxLineIsRetained) {
  // 9 sits in b's first line and must still meet a's second line.
  const std::vector<V> sets{{1, 2, 3, 4, 9}, {5, 6, 7, 9}};
  EXPECT_EQ(allcompare(sets, 4).values, (V{9}));
}

TEST(AllCompare, UnsortedLineIsContractViolation) {
  const std::vector<V> sets{{1, 5, 3}, {1, 3}};
  EXPECT_THROW(allcompare(sets, 4), ContractViolation);
}

TEST(AllCompare, Random64ElementSets) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<VertexId> value(0, 255);
  for (int t = 0; t < 200; ++t) {
    std::vector<V> sets(2);
    for (auto& s : sets) {
      std::set<VertexId> pick;
      while (pick.size() < 64) pick.insert(value(rng));
      s.assign(pick.begin(), pick.end());
    }
    const auto r = allcompare(sets, 16);
    EXPECT_EQ(r.values, merge_intersect(views(sets)));
    EXPECT_LE(r.compare_steps, 8u);
  }
}

TEST(AllCompare, FullyCachedFourWay) {
  V pool(64);
  std::iota(pool.begin(), pool.end(), 100);
  Memory memory;
  memory[ArrayId::Other] = pool;
  const SetRef ref{ArrayId::Other, 0, 64};
  const std::vector<SetRef> refs(4, ref);
  std::vector<FetchCache> fetchers(4, FetchCache(true));
  MemStats stats;
  allcompare_intersect(refs, memory, fetchers, stats, 16);
  const auto lines = stats.line_requests;
  EXPECT_EQ(lines, 16u);
  const auto r = allcompare_intersect(refs, memory, fetchers, stats, 16);
  EXPECT_EQ(r.values, pool);
  EXPECT_EQ(stats.line_requests, lines);
  EXPECT_EQ(stats.cache_hits, 4u);
}

// The three kernels agree, and AllCompare respects the line bound.
TEST(KernelProperty, Equivalence) {
  std::mt19937_64 rng(2024);
  for (unsigned k = 2; k <= 4; ++k)
    for (int t = 0; t < 300; ++t) {
      std::vector<V> sets(k);
      for (auto& s : sets) s = testing::random_set(rng, 70, 120);
      const unsigned width = 1 + t % 17;
      const auto expected = count_intersect(sets);
      EXPECT_EQ(merge_intersect(views(sets)), expected);
      const auto lf = leapfrog_intersect(views(sets));
      EXPECT_EQ(lf.values, expected);
      std::size_t total = 0;
      for (const auto& s : sets) total += s.size();
      EXPECT_LE(lf.steps, total + 1);
      const auto ac = allcompare(sets, width);
      EXPECT_EQ(ac.values, expected);
      EXPECT_LE(ac.compare_steps, line_bound(sets, width));
    }
}

TEST(LineStream, AlignedCutsAtBoundaries) {
  const V v{1, 2, 3, 4, 5, 6, 7};
  auto s = LineStream::aligned_at(v, 14, 4);  // occupies offsets 14..20
  EXPECT_EQ(s.num_lines(), line_span(14, 7, 4));
  std::vector<std::size_t> sizes;
  for (; !s.empty(); s.advance()) sizes.push_back(s.current().valid_count());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{2, 4, 1}));
}

TEST(Fetch, EmptyRequestTouchesNothing) {
  Memory memory;
  FetchCache cache;
  MemStats stats;
  const auto s = fetch({ArrayId::Other, 0, 0}, memory, cache, stats);
  EXPECT_TRUE(s.empty());
  EXPECT_EQ(stats, MemStats{});
  EXPECT_FALSE(cache.valid());
}

TEST(Fetch, LineArithmetic) {
  V pool(40, 0);
  std::iota(pool.begin(), pool.end(), 0);
  Memory memory;
  memory[ArrayId::Other] = pool;
  FetchCache cache;
  MemStats stats;
  fetch({ArrayId::Other, 0, 17}, memory, cache, stats, 16);
  EXPECT_EQ(stats.line_requests, 2u);
  EXPECT_EQ(stats.cache_misses, 1u);
}

TEST(Fetch, RepeatHits) {
  V pool(40);
  std::iota(pool.begin(), pool.end(), 0);
  Memory memory;
  memory[ArrayId::Other] = pool;
  FetchCache cache;
  MemStats stats;
  const SetRef r{ArrayId::Other, 5, 12};
  fetch(r, memory, cache, stats, 16);
  const auto lines = stats.line_requests;
  const auto s = fetch(r, memory, cache, stats, 16);
  EXPECT_EQ(stats.line_requests, lines);
  EXPECT_EQ(stats.cache_hits, 1u);
  EXPECT_EQ(V(s.values().begin(), s.values().end()), V(pool.begin() + 5, pool.begin() + 17));
}

TEST(Fetch, OutOfBoundsIsContractViolation) {
  V pool(4);
  Memory memory;
  memory[ArrayId::Other] = pool;
  FetchCache cache;
  MemStats stats;
  EXPECT_THROW(fetch({ArrayId::Other, 2, 3}, memory, cache, stats), ContractViolation);
  EXPECT_THROW(fetch({ArrayId::Other, 0, 1}, memory, cache, stats, 0), ConfigError);
}

// Random request sequences: data identical with caching on and off; the
// uncached run charges exactly the line-span sum and never hits.
TEST(FetchProperty, CachingIsTransparent) {
  std::mt19937_64 rng(5);
  V pool(500);
  std::iota(pool.begin(), pool.end(), 0);
  Memory memory;
  memory[ArrayId::Other] = pool;
  for (int t = 0; t < 100; ++t) {
    FetchCache on(true), off(false);
    MemStats s_on, s_off;
    std::uint64_t span_sum = 0, hits = 0;
    SetRef prev{ArrayId::Other, 0, 0};
    const unsigned width = 1 + t % 20;
    for (int i = 0; i < 50; ++i) {
      SetRef r = prev;
      if (i == 0 || rng() % 3 != 0) {
        const Offset left = static_cast<Offset>(rng() % 450);
        r = {ArrayId::Other, left, static_cast<Offset>(rng() % 50)};
      } else if (r.size > 0) {
        ++hits;
      }
      const auto a = fetch(r, memory, on, s_on, width).values();
      const V va(a.begin(), a.end());
      const auto b = fetch(r, memory, off, s_off, width).values();
      EXPECT_EQ(va, V(b.begin(), b.end()));
      span_sum += line_span(r.left, r.size, width);
      if (r.size > 0) prev = r;
    }
    EXPECT_EQ(s_off.cache_hits, 0u);
    EXPECT_EQ(s_off.line_requests, span_sum);
    EXPECT_GE(s_on.cache_hits, hits);
    EXPECT_LE(s_on.line_requests, s_off.line_requests);
  }
}

}  // namespace
}  // namespace subq
