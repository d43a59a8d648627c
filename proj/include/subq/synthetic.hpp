// Copyright 2026 The subq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "subq/graph.hpp"

namespace subq {

// Seeded synthetic data graphs. All generators are deterministic in their seed.

/// Erdos-Renyi style directed graph: every ordered pair (self-loops included
/// when allow_self_loops) is an edge with the given probability.
EdgeList random_graph(VertexId n, double edge_probability, std::uint64_t seed, bool allow_self_loops = true);

/// syn_{n,d}: every vertex has exactly d outgoing and d incoming edges
/// (circulant graph over d distinct random offsets), no self-loops.
EdgeList uniform_graph(VertexId n, VertexId d, std::uint64_t seed);

/// Degree-skewed R-MAT graph over 2^scale vertex slots with num_edges samples
/// (duplicates and self-loops dropped).
EdgeList skewed_graph(unsigned scale, std::size_t num_edges, std::uint64_t seed);

}  // namespace subq
