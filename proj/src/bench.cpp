// Copyright 2026 The subq Authors
// SPDX-License-Identifier: Apache-2.0

#include "subq/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>
#include <unordered_set>

#include "subq/intersect.hpp"

namespace subq {

namespace {

// Values of set i are congruent to i + 1 modulo kResidues, common values to
// 0, so sets never share a value by accident and set i does not depend on k.
constexpr VertexId kResidues = kMaxIntersectInputs + 1;

std::vector<VertexId> draw_distinct(std::size_t count, VertexId range, std::mt19937_64& rng) {
  std::unordered_set<VertexId> seen;
  std::vector<VertexId> out;
  std::uniform_int_distribution<VertexId> pick(0, range - 1);
  while (out.size() < count) {
    const VertexId v = pick(rng);
    if (seen.insert(v).second) out.push_back(v);
  }
  return out;
}

// Sets of one intersection, laid out line-aligned in a shared pool.
struct Workload {
  std::vector<VertexId> pool;
  std::vector<std::vector<SetRef>> requests;  // [repetition][set]
};

Workload make_workload(const BenchConfig& cfg, unsigned size, double overlap, unsigned k, double hit_rate) {
  const auto common = static_cast<std::size_t>(std::llround(overlap * size));
  const unsigned width = cfg.line_width;
  const auto padded = (static_cast<std::size_t>(size) + width - 1) / width * width;
  const VertexId range = size * 8;
  Workload w;
  w.requests.resize(cfg.repetitions);
  for (unsigned rep = 0; rep < cfg.repetitions; ++rep) {
    // Repeats reuse the previous request verbatim so every fetcher hits.
    const bool repeat = rep > 0 && std::floor((rep + 1) * hit_rate) > std::floor(rep * hit_rate);
    if (repeat) {
      w.requests[rep] = w.requests[rep - 1];
      continue;
    }
    std::mt19937_64 common_rng(cfg.seed ^ (0x9e3779b97f4a7c15ULL * (rep + 1)));
    const auto shared = draw_distinct(common, range, common_rng);
    for (unsigned i = 0; i < k; ++i) {
      std::mt19937_64 rng(cfg.seed ^ (0x9e3779b97f4a7c15ULL * (rep + 1)) ^ (0xbf58476d1ce4e5b9ULL * (i + 1)));
      std::vector<VertexId> values;
      values.reserve(size);
      for (VertexId v : shared) values.push_back(v * kResidues);
      for (VertexId v : draw_distinct(size - common, range, rng)) values.push_back(v * kResidues + i + 1);
      std::sort(values.begin(), values.end());
      const auto left = static_cast<Offset>(w.pool.size());
      w.pool.insert(w.pool.end(), values.begin(), values.end());
      w.pool.resize(left + padded, 0);
      w.requests[rep].push_back({ArrayId::Other, left, size});
    }
  }
  return w;
}

}  // namespace

const char* to_string(Kernel k) {
  switch (k) {
    case Kernel::AllCompare: return "allcompare";
    case Kernel::LeapFrog: return "leapfrog";
    case Kernel::Merge: return "merge";
  }
  return "?";
}

Kernel parse_kernel(const std::string& text) {
  if (text == "allcompare") return Kernel::AllCompare;
  if (text == "leapfrog") return Kernel::LeapFrog;
  if (text == "merge") return Kernel::Merge;
  throw ConfigError("unknown kernel '" + text + "'");
}

std::vector<BenchRow> bench_intersect(const BenchConfig& cfg) {
  if (cfg.repetitions == 0) throw ConfigError("repetitions must be at least 1");
  if (cfg.line_width == 0) throw ConfigError("line width must be at least 1");
  for (unsigned k : cfg.fan_ins)
    if (k < 2 || k > kMaxIntersectInputs) throw ConfigError("fan-in must be in [2, 4]");
  for (double o : cfg.overlaps)
    if (!(o >= 0.0 && o <= 1.0)) throw ConfigError("overlap exceeds the set size (must be in [0, 1])");
  for (double h : cfg.hit_rates)
    if (!(h >= 0.0 && h <= 1.0)) throw ConfigError("cache hit rate must be in [0, 1]");
  for (unsigned s : cfg.sizes)
    if (s == 0) throw ConfigError("set size must be at least 1");

  std::vector<BenchRow> rows;
  for (unsigned size : cfg.sizes)
    for (double overlap : cfg.overlaps)
      for (unsigned k : cfg.fan_ins)
        for (double hit_rate : cfg.hit_rates) {
          const auto work = make_workload(cfg, size, overlap, k, hit_rate);
          Memory memory;
          memory[ArrayId::Other] = work.pool;
          std::vector<FetchCache> fetchers(k, FetchCache(true));
          BenchRow row;
          row.kernel = cfg.kernel;
          row.k = k;
          row.set_size = size;
          row.overlap = overlap;
          row.line_width = cfg.line_width;
          row.cache_hit_rate = hit_rate;
          row.repetitions = cfg.repetitions;

          const auto start = std::chrono::steady_clock::now();
          for (const auto& request : work.requests) {
            std::uint64_t steps = 0;
            if (cfg.kernel == Kernel::AllCompare) {
              const auto r = allcompare_intersect(request, memory, fetchers, row.mem, cfg.line_width);
              row.outputs += r.values.size();
              steps = r.compare_steps;
            } else {
              std::vector<ValueSet> sets;
              for (std::size_t i = 0; i < request.size(); ++i)
                sets.push_back(fetch(request[i], memory, fetchers[i], row.mem, cfg.line_width).values());
              if (cfg.kernel == Kernel::LeapFrog) {
                const auto r = leapfrog_intersect(sets);
                row.outputs += r.values.size();
                steps = r.steps;
              } else {
                row.outputs += merge_intersect(sets).size();
              }
            }
            row.compare_steps += steps;
            row.max_compare_steps = std::max(row.max_compare_steps, steps);
          }
          row.runtime_ms =
              std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
          rows.push_back(row);
        }
  return rows;
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "# subq bench-intersect v1\n";
  out << "kernel,k,set_size,overlap,line_width,cache_hit_rate,repetitions,outputs,compare_steps,"
         "max_compare_steps,line_requests,cache_hits,cache_misses,runtime_ms\n";
  for (const auto& r : rows) {
    out << to_string(r.kernel) << ',' << r.k << ',' << r.set_size << ',' << std::fixed << std::setprecision(4)
        << r.overlap << ',' << r.line_width << ',' << r.cache_hit_rate << ',' << r.repetitions << ',' << r.outputs
        << ',' << r.compare_steps << ',' << r.max_compare_steps << ',' << r.mem.line_requests << ','
        << r.mem.cache_hits << ',' << r.mem.cache_misses << ',' << std::setprecision(3) << r.runtime_ms << '\n';
  }
}

}  // namespace subq
