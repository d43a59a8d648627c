// Copyright 2026 The subq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "subq/types.hpp"

namespace subq {

struct EdgeList {
  std::vector<std::pair<RawId, RawId>> edges;
  bool directed = true;
};

/// Parses a whitespace separated edge list. Lines starting with '#' or '%'
/// are comments. Throws ParseError naming the offending line.
EdgeList load_edge_list(std::istream& in, bool directed = true);
EdgeList load_edge_list_file(const std::string& path, bool directed = true);

/// Half-open vertex range [lo, hi).
struct VertexInterval {
  VertexId lo = 0;
  VertexId hi = 0;

  VertexId size() const { return hi - lo; }
  bool contains(VertexId v) const { return v >= lo && v < hi; }
  friend bool operator==(const VertexInterval&, const VertexInterval&) = default;
};

/// Dual (outgoing and incoming) compressed sparse row graph.
///
/// Every neighborhood slice is strictly ascending, both directions hold the
/// same edge set, and all ids are dense in [0, num_vertices). Instances are
/// immutable and may be shared by concurrently running engine instances.
class CsrGraph {
 public:
  CsrGraph();

  /// Validates the arrays and throws ContractViolation if any invariant is broken.
  static CsrGraph from_arrays(std::vector<Offset> pointers_out, std::vector<VertexId> neighbors_out,
                              std::vector<Offset> pointers_in, std::vector<VertexId> neighbors_in);

  /// Builds both directions from a list of dense, deduplicated directed edges.
  static CsrGraph from_dense_edges(VertexId num_vertices,
                                   std::vector<std::pair<VertexId, VertexId>> edges);

  VertexId num_vertices() const { return static_cast<VertexId>(pointers_out_.size() - 1); }
  std::size_t num_edges() const { return neighbors_out_.size(); }

  std::span<const Offset> pointers(Direction d) const {
    return d == Direction::Out ? pointers_out_ : pointers_in_;
  }
  std::span<const VertexId> neighbors(Direction d) const {
    return d == Direction::Out ? neighbors_out_ : neighbors_in_;
  }

  /// Values of the neighborhood slice of v.
  std::span<const VertexId> adjacent(VertexId v, Direction d) const;
  Offset degree(VertexId v, Direction d) const;
  bool has_edge(VertexId u, VertexId v) const;

  /// True when the outgoing and incoming structures are element-wise equal.
  bool symmetric() const { return symmetric_; }

  /// Edge set in (src, dst) order, ascending.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  /// Raw contents of an addressable array; `Other` is empty.
  std::span<const VertexId> array(ArrayId id) const;

  friend bool operator==(const CsrGraph& a, const CsrGraph& b) {
    return a.pointers_out_ == b.pointers_out_ && a.neighbors_out_ == b.neighbors_out_ &&
           a.pointers_in_ == b.pointers_in_ && a.neighbors_in_ == b.neighbors_in_;
  }

 private:
  std::vector<Offset> pointers_out_;
  std::vector<VertexId> neighbors_out_;
  std::vector<Offset> pointers_in_;
  std::vector<VertexId> neighbors_in_;
  bool symmetric_ = true;
};

/// Remaps raw ids to dense ids (ascending raw id gives ascending dense id),
/// collapses duplicate edges and keeps self-loops. Raw ids that never occur in
/// an edge are not assigned a dense id. Undirected edge lists are symmetrized.
CsrGraph build_csr(const EdgeList& edges);

/// The dense-to-raw id table used by build_csr: sorted distinct raw ids.
std::vector<RawId> dense_id_table(const EdgeList& edges);

/// Adds the reverse of every edge. Self-loops stay single.
CsrGraph make_undirected(const CsrGraph& g);

/// Relabels every vertex v as permutation[v]; permutation must be a bijection.
CsrGraph relabel(const CsrGraph& g, std::span<const VertexId> permutation);

std::vector<VertexId> invert_permutation(std::span<const VertexId> permutation);

struct StrideMapping {
  CsrGraph graph;
  /// old id -> new id
  std::vector<VertexId> permutation;
};

/// New order v0, v_s, v_2s, ..., then v1, v_1+s, ... until every id is placed.
StrideMapping stride_map(const CsrGraph& g, VertexId stride);
std::vector<VertexId> stride_permutation(VertexId num_vertices, VertexId stride);

/// Splits [0, n) into p contiguous intervals whose sizes differ by at most one.
std::vector<VertexInterval> partition_vertices(VertexId num_vertices, unsigned p);

/// Slice of the neighbors array holding v's neighborhood in direction d.
SetRef neighborhood(const CsrGraph& g, VertexId v, Direction d);

// Binary dump: "CSR1", num_vertices, num_edges, pointers_out, neighbors_out,
// pointers_in, neighbors_in; every value little-endian uint32.
void write_csr_binary(const CsrGraph& g, std::ostream& out);
CsrGraph read_csr_binary(std::istream& in);

/// Loads a graph from a text edge list or a binary dump (detected by magic).
CsrGraph load_graph_file(const std::string& path, bool directed = true);

}  // namespace subq
