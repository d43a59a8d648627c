// Copyright 2026 The subq Authors
// SPDX-License-Identifier: Apache-2.0

#include "subq/synthetic.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace subq {

EdgeList random_graph(VertexId n, double edge_probability, std::uint64_t seed, bool allow_self_loops) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_probability);
  EdgeList out;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v) {
      if (u == v && !allow_self_loops) continue;
      if (coin(rng)) out.edges.emplace_back(u, v);
    }
  return out;
}

EdgeList uniform_graph(VertexId n, VertexId d, std::uint64_t seed) {
  if (d >= n) throw ConfigError("uniform graph needs degree < vertex count");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<VertexId> pick(1, n - 1);
  std::set<VertexId> offsets;
  while (offsets.size() < d) offsets.insert(pick(rng));
  EdgeList out;
  out.edges.reserve(static_cast<std::size_t>(n) * d);
  for (VertexId v = 0; v < n; ++v)
    for (VertexId o : offsets) out.edges.emplace_back(v, (static_cast<std::uint64_t>(v) + o) % n);
  return out;
}

EdgeList skewed_graph(unsigned scale, std::size_t num_edges, std::uint64_t seed) {
  // Standard R-MAT quadrant probabilities.
  constexpr double a = 0.57, b = 0.19, c = 0.19;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::pair<RawId, RawId>> edges;
  edges.reserve(num_edges);
  for (std::size_t i = 0; i < num_edges; ++i) {
    RawId u = 0, v = 0;
    for (unsigned bit = 0; bit < scale; ++bit) {
      const double r = unit(rng);
      const bool right = r >= a && (r < a + b || r >= a + b + c);
      const bool down = r >= a + b;
      u = (u << 1) | (down ? 1 : 0);
      v = (v << 1) | (right ? 1 : 0);
    }
    if (u != v) edges.emplace_back(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  EdgeList out;
  out.edges = std::move(edges);
  return out;
}

}  // namespace subq
