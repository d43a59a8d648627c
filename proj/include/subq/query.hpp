// Copyright 2026 The subq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subq/types.hpp"

namespace subq {

enum class MatchMode : std::uint8_t { Homomorphism, Isomorphism };

const char* to_string(MatchMode m);
MatchMode parse_match_mode(const std::string& text);

/// Default number of levels (query vertices) an engine instance supports.
constexpr unsigned kDefaultMaxLevels = 6;
/// Hard storage limit of a partial matching.
constexpr unsigned kSlotCapacity = 8;

using QueryVertex = std::uint8_t;

/// Connected, self-loop free query graph. Undirected queries store each edge
/// once as (min, max); directed queries must not contain both (a,b) and (b,a).
struct QueryGraph {
  unsigned num_vertices = 0;
  std::vector<std::pair<QueryVertex, QueryVertex>> edges;
  bool directed = true;
  MatchMode mode = MatchMode::Isomorphism;

  /// Edge a->b (directed) or a-b (undirected).
  bool has_edge(unsigned a, unsigned b) const;
  bool adjacent(unsigned a, unsigned b) const { return has_edge(a, b) || has_edge(b, a); }
  unsigned out_degree(unsigned v) const;
  unsigned in_degree(unsigned v) const;
};

/// Validates an edge list into a query graph. Rejects self-loops, reciprocal
/// directed edges, disconnected graphs, non-dense vertex ids and more than
/// `max_levels` vertices with QueryError.
QueryGraph parse_query(const std::vector<std::pair<unsigned, unsigned>>& edges, bool directed, MatchMode mode,
                       unsigned max_levels = kDefaultMaxLevels);

/// Query vertex ordering: order[i] is the query vertex matched at level i.
struct Qvo {
  std::vector<QueryVertex> order;
  friend bool operator==(const Qvo&, const Qvo&) = default;
};

std::string to_string(const Qvo& qvo);
Qvo parse_qvo(const std::string& text);

/// order is a permutation, order[0] and order[1] are adjacent, and every
/// later vertex is adjacent to some earlier one.
bool is_valid_qvo(const QueryGraph& q, const Qvo& qvo);

/// All valid orderings, lexicographically ascending.
std::vector<Qvo> enumerate_qvos(const QueryGraph& q);

struct QueryFile {
  QueryGraph graph;
  std::optional<Qvo> qvo;
};

/// Query text format: an edge list plus optional directives
///   %directed true|false   (default true)
///   %mode hom|iso          (default iso)
///   %qvo 0,2,1
/// Other '%' or '#' lines are comments.
QueryFile load_query(std::istream& in, unsigned max_levels = kDefaultMaxLevels);
QueryFile load_query_file(const std::string& path, unsigned max_levels = kDefaultMaxLevels);

/// Reference to the metadata of one matched slot in a given direction.
struct SlotRef {
  std::uint8_t slot = 0;
  Direction dir = Direction::Out;
  friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

/// Minimum neighborhood sizes a data vertex needs to stay a candidate.
struct DegreeThreshold {
  std::uint32_t out = 0;
  std::uint32_t in = 0;
  std::uint32_t get(Direction d) const { return d == Direction::Out ? out : in; }
  friend bool operator==(const DegreeThreshold&, const DegreeThreshold&) = default;
};

/// The first two levels: slot 0 scans its neighbors in `direction` to form slot 1.
struct SourceSpec {
  Direction direction = Direction::Out;
  DegreeThreshold first;
  DegreeThreshold second;
};

/// Extension of level-`level` matchings by query vertex qvo[level].
struct ExtensionStep {
  unsigned level = 0;
  /// Slots whose metadata must be (re)loaded in the given direction.
  std::vector<SlotRef> refetch;
  /// Neighborhoods intersected to find candidates (1..kMaxIntersectInputs).
  std::vector<SlotRef> intersect_inputs;
  /// Threshold of the newly added vertex.
  DegreeThreshold prune_threshold;
  bool distinct_check = false;
};

struct QueryPlan {
  Qvo qvo;
  SourceSpec source;
  std::vector<ExtensionStep> steps;
  MatchMode mode = MatchMode::Isomorphism;
  bool directed = true;
  unsigned num_levels = 0;
  /// Pruning threshold of every slot (indexed by level, not query vertex).
  std::vector<DegreeThreshold> thresholds;
};

/// Degree thresholds used by failing-set pruning. Isomorphisms need the full
/// query degree; homomorphisms may fold neighbors together, so only
/// non-emptiness is required there.
DegreeThreshold prune_threshold_for(const QueryGraph& q, unsigned query_vertex);

/// Compiles a query and an ordering into engine parameters. Throws QueryError
/// for an invalid ordering or when a level would need more than
/// kMaxIntersectInputs sets.
QueryPlan plan_query(const QueryGraph& q, const Qvo& qvo);

/// First lexicographic ordering that plans successfully.
Qvo default_qvo(const QueryGraph& q);

}  // namespace subq
