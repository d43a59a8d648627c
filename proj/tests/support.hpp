// Copyright 2026 The subq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "subq/engine.hpp"
#include "subq/graph.hpp"
#include "subq/query.hpp"
#include "subq/synthetic.hpp"

namespace subq::testing {

// The 4-vertex example graph with a self-loop on 2.
inline std::vector<std::pair<RawId, RawId>> fig3_edges() {
  return {{0, 1}, {1, 2}, {2, 3}, {2, 2}, {3, 0}, {0, 2}, {3, 1}};
}

inline CsrGraph fig3() { return build_csr({fig3_edges(), true}); }

inline QueryGraph triangle(MatchMode mode, bool directed = true) {
  return parse_query({{0, 1}, {0, 2}, {2, 1}}, directed, mode);
}

// Query shapes matching queries/q1.q .. q7.q.
inline std::vector<std::vector<std::pair<unsigned, unsigned>>> shapes() {
  return {
      {{0, 1}, {1, 2}, {0, 2}},
      {{0, 1}, {1, 2}, {2, 3}, {3, 0}},
      {{0, 1}, {0, 3}, {1, 2}, {3, 2}},
      {{0, 1}, {0, 2}, {1, 2}, {3, 1}, {3, 2}},
      {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {3, 2}},
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
      {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
  };
}

// Random directed graph over exactly n vertices, self-loops included.
inline CsrGraph random_dense_graph(VertexId n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return CsrGraph::from_dense_edges(n, edges);
}

inline std::vector<std::vector<VertexId>> sorted_tuples(const ResultSet& r) {
  auto t = r.tuples();
  std::sort(t.begin(), t.end());
  return t;
}

inline ParallelOutput run(const CsrGraph& g, const QueryGraph& q, const Qvo& qvo, unsigned p = 1,
                          VertexId stride = 1, bool caching = true, bool pruning = true,
                          unsigned width = kDefaultLineWidth) {
  InstanceConfig cfg;
  cfg.caching = caching;
  cfg.pruning = pruning;
  cfg.line_width = width;
  return run_parallel(g, plan_query(q, qvo), p, stride, cfg);
}

// Random strictly ascending set drawn from [0, range).
inline std::vector<VertexId> random_set(std::mt19937_64& rng, std::size_t max_size, VertexId range) {
  std::uniform_int_distribution<std::size_t> size_dist(0, max_size);
  std::uniform_int_distribution<VertexId> value(0, range - 1);
  std::vector<VertexId> s(size_dist(rng));
  for (auto& v : s) v = value(rng);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace subq::testing
