// Copyright 2026 The subq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "subq/engine.hpp"
#include "subq/graph.hpp"
#include "subq/query.hpp"

namespace subq {

/// Largest inputs the brute-force enumerator accepts.
constexpr VertexId kOracleMaxVertices = 200;
constexpr unsigned kOracleMaxQueryVertices = 6;

/// Exhaustive subgraph enumeration used as ground truth.
///
/// Query vertices are assigned in `order` (identity when absent), trying every
/// data vertex for each; a total assignment is kept iff every query edge maps
/// onto a data edge (either orientation for undirected queries) and, for
/// isomorphisms, the assignment is injective. Tuples are laid out in `order`,
/// the same layout the engine uses for a plan with that ordering.
/// Throws ConfigError beyond desk scale.
ResultSet enumerate(const CsrGraph& g, const QueryGraph& q, const std::optional<Qvo>& order = std::nullopt);

}  // namespace subq
