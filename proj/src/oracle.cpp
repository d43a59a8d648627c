// Copyright 2026 The subq Authors
// SPDX-License-Identifier: Apache-2.0

#include "subq/oracle.hpp"

#include <numeric>

namespace subq {

namespace {

struct Enumerator {
  const QueryGraph& q;
  std::vector<unsigned> order;
  VertexId n;
  std::vector<bool> adjacency;  // n x n, row = source
  std::vector<VertexId> assignment;  // indexed by query vertex
  std::vector<bool> assigned;
  ResultSet result;

  bool edge(VertexId a, VertexId b) const { return adjacency[static_cast<std::size_t>(a) * n + b]; }

  // Checks every query edge between query vertex `qv` and already assigned ones.
  bool consistent(unsigned qv) const {
    for (const auto& [a, b] : q.edges) {
      if (a != qv && b != qv) continue;
      const unsigned other = a == qv ? b : a;
      if (!assigned[other] && other != qv) continue;
      const VertexId da = assignment[a], db = assignment[b];
      const bool ok = q.directed ? edge(da, db) : (edge(da, db) || edge(db, da));
      if (!ok) return false;
    }
    return true;
  }

  void extend(std::size_t depth) {
    if (depth == order.size()) {
      ++result.count;
      for (unsigned qv : order) result.flat.push_back(assignment[qv]);
      return;
    }
    const unsigned qv = order[depth];
    for (VertexId d = 0; d < n; ++d) {
      if (q.mode == MatchMode::Isomorphism) {
        bool used = false;
        for (std::size_t i = 0; i < depth && !used; ++i) used = assignment[order[i]] == d;
        if (used) continue;
      }
      assignment[qv] = d;
      assigned[qv] = true;
      if (consistent(qv)) extend(depth + 1);
      assigned[qv] = false;
    }
  }
};

}  // namespace

ResultSet enumerate(const CsrGraph& g, const QueryGraph& q, const std::optional<Qvo>& order) {
  if (g.num_vertices() > kOracleMaxVertices || q.num_vertices > kOracleMaxQueryVertices)
    throw ConfigError("oracle input beyond desk scale");

  Enumerator e{q, {}, g.num_vertices(), {}, {}, {}, {}};
  if (order) {
    if (order->order.size() != q.num_vertices) throw QueryError("ordering does not cover the query");
    e.order.assign(order->order.begin(), order->order.end());
  } else {
    e.order.resize(q.num_vertices);
    std::iota(e.order.begin(), e.order.end(), 0u);
  }
  e.adjacency.assign(static_cast<std::size_t>(e.n) * e.n, false);
  for (const auto& [u, v] : g.edges()) e.adjacency[static_cast<std::size_t>(u) * e.n + v] = true;
  e.assignment.assign(q.num_vertices, 0);
  e.assigned.assign(q.num_vertices, false);
  e.result.width = q.num_vertices;
  e.extend(0);
  return std::move(e.result);
}

}  // namespace subq
