// Copyright 2026 The subq Authors
// SPDX-License-Identifier: Apache-2.0

#include "subq/engine.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <limits>
#include <random>
#include <thread>

namespace subq {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void load_metadata(Slot& slot, Direction dir, const Memory& memory, FetchCache& cache, MemStats& stats,
                   unsigned width) {
  if (slot.dir == meta_of(dir)) return;
  const SetRef request{pointers_array(dir), slot.vertex, 2};
  const auto bounds = fetch(request, memory, cache, stats, width, RequestKind::Pointers).values();
  slot.left = bounds[0];
  slot.size = bounds[1] - bounds[0];
  slot.dir = meta_of(dir);
}

void require_runnable(const CsrGraph& g, const QueryPlan& plan, const InstanceConfig& cfg) {
  if (plan.num_levels < 2) throw ConfigError("plan has fewer than two levels");
  if (plan.num_levels > cfg.max_levels || plan.num_levels > kSlotCapacity)
    throw ConfigError("query needs " + std::to_string(plan.num_levels) + " levels, instance has " +
                      std::to_string(std::min(cfg.max_levels, kSlotCapacity)));
  if (plan.steps.size() + 2 != plan.num_levels) throw ConfigError("plan step count does not match its levels");
  if (cfg.line_width == 0) throw ConfigError("line width must be at least 1");
  if (cfg.interval.lo > cfg.interval.hi || cfg.interval.hi > g.num_vertices())
    throw ConfigError("vertex interval outside the graph");
  if (!plan.directed && !g.symmetric()) throw ConfigError("undirected plan needs a symmetric graph");
}

// Extends one matching by one level; `emit` receives every survivor in order.
template <typename Emit>
void extend_matching(PartialMatching m, const ExtensionStep& step, std::span<const DegreeThreshold> thresholds,
                     const Memory& memory, ExtenderCaches& caches, MemStats& mem, unsigned width, Emit&& emit) {
  std::array<std::uint8_t, kMaxIntersectInputs> refetched{};
  for (std::size_t i = 0; i < step.refetch.size(); ++i) {
    const auto& ref = step.refetch[i];
    load_metadata(m.slots[ref.slot], ref.dir, memory, caches.pointer[i], mem, width);
    refetched[i] = ref.slot;
  }
  const FilterParams first{step.intersect_inputs, {refetched.data(), step.refetch.size()}, thresholds, false};
  if (!matching_filter(m, first)) return;

  std::array<SetRef, kMaxIntersectInputs> sets{};
  const std::size_t k = step.intersect_inputs.size();
  for (std::size_t i = 0; i < k; ++i) {
    const auto& slot = m.slots[step.intersect_inputs[i].slot];
    sets[i] = {neighbors_array(step.intersect_inputs[i].dir), slot.left, slot.size};
  }

  std::span<const VertexId> candidates;
  AllCompareResult joined;
  if (k == 1) {
    candidates = fetch(sets[0], memory, caches.sets[0], mem, width).values();
  } else {
    joined = allcompare_intersect(std::span<const SetRef>(sets.data(), k), memory, caches.sets, mem, width);
    candidates = joined.values;
  }

  const FilterParams second{{}, {}, {}, step.distinct_check};
  PartialMatching next = m;
  next.level = static_cast<std::uint8_t>(m.level + 1);
  for (VertexId w : candidates) {
    next.slots[m.level] = Slot{w, 0, 0, MetaDir::None};
    if (matching_filter(next, second)) emit(next);
  }
}

// One engine instance: owns its caches, statistics and result buffer.
class Instance {
 public:
  Instance(const CsrGraph& g, const QueryPlan& plan, const InstanceConfig& cfg)
      : g_(g), plan_(plan), cfg_(cfg), memory_(memory_of(g)) {
    const std::size_t extenders = plan.steps.size();
    caches_.reserve(extenders);
    for (const auto& step : plan.steps) caches_.emplace_back(step, cfg.caching);
    buffers_.resize(extenders + 1);
    for (auto& b : buffers_) b.reserve(std::max<std::size_t>(cfg.buffer_size, 1));
    stats_.intermediates.assign(extenders + 1, 0);
    stats_.extender_mem.resize(extenders);
    stats_.interval = cfg.interval;
    results_.width = plan.num_levels;
    if (cfg.pruning) thresholds_ = plan.thresholds;
  }

  InstanceOutput run() {
    const auto start = Clock::now();
    scan_source();
    for (std::size_t stage = 0; stage < buffers_.size(); ++stage) drain(stage);
    stats_.elapsed_seconds = seconds_since(start);
    return {std::move(results_), std::move(stats_)};
  }

 private:
  void scan_source() {
    const auto [lo, hi] = cfg_.interval;
    if (lo == hi) return;
    const Direction dir = plan_.source.direction;
    const auto pointers = g_.pointers(dir);
    const auto neighbors = g_.neighbors(dir);
    stats_.source_mem.pointer_requests += line_span(lo, hi - lo + 1, cfg_.line_width);
    stats_.source_mem.line_requests += line_span(pointers[lo], pointers[hi] - pointers[lo], cfg_.line_width);

    const FilterParams filter{{}, pruned_source_, thresholds_, plan_.mode == MatchMode::Isomorphism};
    PartialMatching m;
    m.level = 2;
    for (VertexId v = lo; v < hi; ++v) {
      m.slots[0] = Slot{v, pointers[v], pointers[v + 1] - pointers[v], meta_of(dir)};
      for (Offset i = pointers[v]; i < pointers[v + 1]; ++i) {
        ++stats_.source_edges;
        m.slots[1] = Slot{neighbors[i], 0, 0, MetaDir::None};
        if (!matching_filter(m, filter)) continue;
        ++stats_.intermediates[0];
        push(0, m);
      }
    }
  }

  void push(std::size_t stage, const PartialMatching& m) {
    auto& buffer = buffers_[stage];
    buffer.push_back(m);
    if (buffer.size() >= cfg_.buffer_size) drain(stage);
  }

  void drain(std::size_t stage) {
    auto& buffer = buffers_[stage];
    if (stage + 1 == buffers_.size()) {
      matching_sink(buffer, cfg_.count_only, results_);
    } else {
      for (const auto& m : buffer)
        extend_matching(m, plan_.steps[stage], thresholds_, memory_, caches_[stage], stats_.extender_mem[stage],
                        cfg_.line_width, [this, stage](const PartialMatching& out) {
                          ++stats_.intermediates[stage + 1];
                          push(stage + 1, out);
                        });
    }
    buffer.clear();
  }

  static constexpr std::array<std::uint8_t, 1> kSourceSlot{0};

  const CsrGraph& g_;
  const QueryPlan& plan_;
  InstanceConfig cfg_;
  Memory memory_;
  std::vector<ExtenderCaches> caches_;
  std::vector<std::vector<PartialMatching>> buffers_;
  std::vector<DegreeThreshold> thresholds_;
  std::span<const std::uint8_t> pruned_source_{kSourceSlot};
  RunStats stats_;
  ResultSet results_;
};

}  // namespace

std::vector<std::vector<VertexId>> ResultSet::tuples() const {
  std::vector<std::vector<VertexId>> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    const auto t = tuple(i);
    out.emplace_back(t.begin(), t.end());
  }
  return out;
}

MemStats RunStats::total_mem() const {
  MemStats total = source_mem;
  for (const auto& m : extender_mem) total += m;
  return total;
}

Memory memory_of(const CsrGraph& g) {
  Memory memory;
  for (ArrayId id : {ArrayId::NeighborsOut, ArrayId::NeighborsIn, ArrayId::PointersOut, ArrayId::PointersIn})
    memory[id] = g.array(id);
  return memory;
}

bool matching_filter(const PartialMatching& m, const FilterParams& params) {
  for (const auto& need : params.needed)
    if (m.slots[need.slot].size == 0) return false;
  if (!params.thresholds.empty()) {
    for (auto s : params.pruned_slots) {
      const Slot& slot = m.slots[s];
      if (slot.dir == MetaDir::None) continue;
      const Direction d = slot.dir == MetaDir::Out ? Direction::Out : Direction::In;
      if (slot.size < params.thresholds[s].get(d)) return false;
    }
  }
  if (params.distinct_check && m.level > 0) {
    const VertexId newest = m.slots[m.level - 1].vertex;
    for (std::size_t i = 0; i + 1 < m.level; ++i)
      if (m.slots[i].vertex == newest) return false;
  }
  return true;
}

std::vector<PartialMatching> matching_source(const CsrGraph& g, const QueryPlan& plan, VertexInterval interval,
                                             MemStats& stats, unsigned line_width) {
  if (interval.lo > interval.hi || interval.hi > g.num_vertices())
    throw ConfigError("vertex interval outside the graph");
  std::vector<PartialMatching> out;
  if (interval.lo == interval.hi) return out;
  const Direction dir = plan.source.direction;
  const auto pointers = g.pointers(dir);
  const auto neighbors = g.neighbors(dir);
  stats.pointer_requests += line_span(interval.lo, interval.size() + 1, line_width);
  stats.line_requests +=
      line_span(pointers[interval.lo], pointers[interval.hi] - pointers[interval.lo], line_width);
  PartialMatching m;
  m.level = 2;
  for (VertexId v = interval.lo; v < interval.hi; ++v) {
    m.slots[0] = Slot{v, pointers[v], pointers[v + 1] - pointers[v], meta_of(dir)};
    for (Offset i = pointers[v]; i < pointers[v + 1]; ++i) {
      m.slots[1] = Slot{neighbors[i], 0, 0, MetaDir::None};
      out.push_back(m);
    }
  }
  return out;
}

void pointer_fetch(PartialMatching& m, std::span<const SlotRef> refetch, const CsrGraph& g, FetchCache& cache,
                   MemStats& stats, unsigned line_width) {
  const Memory memory = memory_of(g);
  for (const auto& ref : refetch) {
    if (ref.slot >= m.level) throw ContractViolation("refetch slot beyond matching level");
    load_metadata(m.slots[ref.slot], ref.dir, memory, cache, stats, line_width);
  }
}

ExtenderCaches::ExtenderCaches(const ExtensionStep& step, bool enabled)
    : pointer(step.refetch.size(), FetchCache(enabled)), sets(kMaxIntersectInputs, FetchCache(enabled)) {}

std::vector<PartialMatching> matching_extender(std::span<const PartialMatching> in, const ExtensionStep& step,
                                               const QueryPlan& plan, const CsrGraph& g, ExtenderCaches& caches,
                                               MemStats& stats, const InstanceConfig& cfg) {
  if (cfg.line_width == 0) throw ConfigError("line width must be at least 1");
  const Memory memory = memory_of(g);
  const std::span<const DegreeThreshold> thresholds =
      cfg.pruning ? std::span<const DegreeThreshold>(plan.thresholds) : std::span<const DegreeThreshold>();
  std::vector<PartialMatching> out;
  for (const auto& m : in) {
    if (m.level != step.level) throw ContractViolation("matching level does not match extension step");
    extend_matching(m, step, thresholds, memory, caches, stats, cfg.line_width,
                    [&out](const PartialMatching& next) { out.push_back(next); });
  }
  return out;
}

void matching_sink(std::span<const PartialMatching> in, bool count_only, ResultSet& out) {
  out.count += in.size();
  if (count_only) return;
  for (const auto& m : in) {
    if (out.width == 0) out.width = m.level;
    if (m.level != out.width) throw ContractViolation("sink received a partial matching");
    for (std::size_t i = 0; i < m.level; ++i) out.flat.push_back(m.slots[i].vertex);
  }
}

InstanceOutput run_instance(const CsrGraph& g, const QueryPlan& plan, const InstanceConfig& cfg) {
  require_runnable(g, plan, cfg);
  if (cfg.buffer_size == 0) throw ConfigError("buffer size must be at least 1");
  return Instance(g, plan, cfg).run();
}

ParallelOutput run_parallel(const CsrGraph& g, const QueryPlan& plan, unsigned p, VertexId stride,
                            const InstanceConfig& cfg) {
  if (p == 0) throw ConfigError("instance count must be at least 1");
  if (stride == 0) throw ConfigError("stride must be at least 1");
  const auto start = Clock::now();

  const CsrGraph* base = &g;
  CsrGraph symmetric;
  if (!plan.directed && !g.symmetric()) {
    symmetric = make_undirected(g);
    base = &symmetric;
  }
  const CsrGraph* work = base;
  StrideMapping mapping;
  std::vector<VertexId> inverse;
  if (p > 1 && stride > 1) {
    mapping = stride_map(*base, stride);
    inverse = invert_permutation(mapping.permutation);
    work = &mapping.graph;
  }

  const auto intervals = partition_vertices(work->num_vertices(), p);
  std::vector<InstanceOutput> outputs(p);
  std::vector<std::exception_ptr> errors(p);
  auto run_one = [&](unsigned i) {
    try {
      InstanceConfig local = cfg;
      local.interval = intervals[i];
      outputs[i] = run_instance(*work, plan, local);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (p == 1) {
    run_one(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(p);
    for (unsigned i = 0; i < p; ++i) threads.emplace_back(run_one, i);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  ParallelOutput out;
  out.results.width = plan.num_levels;
  for (auto& o : outputs) {
    out.results.count += o.results.count;
    if (inverse.empty()) {
      out.results.flat.insert(out.results.flat.end(), o.results.flat.begin(), o.results.flat.end());
    } else {
      for (VertexId v : o.results.flat) out.results.flat.push_back(inverse[v]);
    }
    out.instances.push_back(std::move(o.stats));
  }
  out.elapsed_seconds = seconds_since(start);
  return out;
}

std::vector<std::vector<VertexId>> to_query_order(const ResultSet& r, const Qvo& qvo) {
  if (qvo.order.size() != r.width) throw ContractViolation("ordering width does not match results");
  std::vector<std::vector<VertexId>> out;
  out.reserve(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto t = r.tuple(i);
    std::vector<VertexId> reordered(r.width);
    for (std::size_t s = 0; s < r.width; ++s) reordered[qvo.order[s]] = t[s];
    out.push_back(std::move(reordered));
  }
  return out;
}

VertexInterval sample_interval(VertexId n, std::uint64_t seed) {
  const VertexId sample = std::max<VertexId>(1, n / 10);
  std::mt19937_64 rng(seed);
  const VertexId lo = n > sample ? std::uniform_int_distribution<VertexId>(0, n - sample)(rng) : 0;
  return {lo, std::min(n, lo + sample)};
}

Qvo choose_best_qvo(const QueryGraph& q, const CsrGraph& g, std::size_t budget, std::uint64_t seed) {
  if (budget == 0) throw ConfigError("optimizer budget must be at least 1");
  std::vector<std::pair<Qvo, QueryPlan>> candidates;
  for (auto& qvo : enumerate_qvos(q)) {
    if (candidates.size() == budget) break;
    try {
      auto plan = plan_query(q, qvo);
      candidates.emplace_back(std::move(qvo), std::move(plan));
    } catch (const QueryError&) {
    }
  }
  if (candidates.empty()) throw QueryError("no query vertex ordering fits the intersector fan-in");
  if (candidates.size() == 1) return candidates.front().first;

  const CsrGraph sym = (!q.directed && !g.symmetric()) ? make_undirected(g) : CsrGraph();
  const CsrGraph& data = (!q.directed && !g.symmetric()) ? sym : g;
  InstanceConfig cfg;
  cfg.interval = sample_interval(data.num_vertices(), seed);
  cfg.count_only = true;
  cfg.max_levels = kSlotCapacity;
  std::size_t best = 0;
  std::uint64_t best_cost = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto out = run_instance(data, candidates[i].second, cfg);
    std::uint64_t cost = 0;
    for (auto c : out.stats.intermediates) cost += c;
    if (cost < best_cost) {
      best_cost = cost;
      best = i;
    }
  }
  return candidates[best].first;
}

}  // namespace subq
