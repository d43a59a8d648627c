// Copyright 2026 The subq Authors
// SPDX-License-Identifier: Apache-2.0

#include "subq/graph.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace subq {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; }

// Parses the next unsigned integer token; returns false when no token is left.
bool next_token(std::string_view& rest, std::string_view& token) {
  std::size_t i = 0;
  while (i < rest.size() && is_space(rest[i])) ++i;
  if (i == rest.size()) return false;
  std::size_t j = i;
  while (j < rest.size() && !is_space(rest[j])) ++j;
  token = rest.substr(i, j - i);
  rest = rest.substr(j);
  return true;
}

bool parse_raw_id(std::string_view token, RawId& value) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size();
}

// Counting-sort style CSR construction from deduplicated (src, dst) pairs
// already sorted by (src, dst).
void fill_csr(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& sorted_edges,
              std::vector<Offset>& pointers, std::vector<VertexId>& neighbors) {
  pointers.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& e : sorted_edges) ++pointers[e.first + 1];
  for (std::size_t v = 0; v < n; ++v) pointers[v + 1] += pointers[v];
  neighbors.resize(sorted_edges.size());
  for (std::size_t i = 0; i < sorted_edges.size(); ++i) neighbors[i] = sorted_edges[i].second;
}

void validate_direction(std::size_t n, const std::vector<Offset>& pointers,
                        const std::vector<VertexId>& neighbors, const char* name) {
  const std::string tag(name);
  if (pointers.size() != n + 1) throw ContractViolation(tag + ": pointers length mismatch");
  if (pointers.front() != 0) throw ContractViolation(tag + ": pointers[0] != 0");
  if (pointers.back() != neighbors.size())
    throw ContractViolation(tag + ": pointers[n] != neighbors length");
  for (std::size_t v = 0; v < n; ++v) {
    if (pointers[v] > pointers[v + 1]) throw ContractViolation(tag + ": pointers decrease");
    for (Offset i = pointers[v]; i < pointers[v + 1]; ++i) {
      if (neighbors[i] >= n) throw ContractViolation(tag + ": neighbor id out of range");
      if (i > pointers[v] && neighbors[i - 1] >= neighbors[i])
        throw ContractViolation(tag + ": neighborhood not strictly ascending");
    }
  }
}

void put_u32(std::ostream& out, std::uint32_t v) {
  const std::array<char, 4> b{static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                              static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(b.data(), 4);
}

std::uint32_t get_u32(std::istream& in) {
  std::array<unsigned char, 4> b{};
  if (!in.read(reinterpret_cast<char*>(b.data()), 4)) throw ParseError("truncated binary CSR dump");
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

std::vector<std::uint32_t> get_array(std::istream& in, std::size_t n) {
  std::vector<std::uint32_t> values(n);
  for (auto& v : values) v = get_u32(in);
  return values;
}

constexpr std::array<char, 4> kMagic{'C', 'S', 'R', '1'};

}  // namespace

EdgeList load_edge_list(std::istream& in, bool directed) {
  EdgeList result;
  result.directed = directed;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest(line);
    std::string_view first;
    if (!next_token(rest, first)) continue;
    if (first.front() == '#' || first.front() == '%') continue;
    std::string_view second, extra;
    RawId src = 0, dst = 0;
    if (!next_token(rest, second) || next_token(rest, extra) || !parse_raw_id(first, src) ||
        !parse_raw_id(second, dst)) {
      throw ParseError("expected two non-negative integers", line_no);
    }
    result.edges.emplace_back(src, dst);
  }
  return result;
}

EdgeList load_edge_list_file(const std::string& path, bool directed) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return load_edge_list(in, directed);
}

CsrGraph::CsrGraph() : pointers_out_(1, 0), pointers_in_(1, 0) {}

CsrGraph CsrGraph::from_arrays(std::vector<Offset> pointers_out, std::vector<VertexId> neighbors_out,
                               std::vector<Offset> pointers_in, std::vector<VertexId> neighbors_in) {
  if (pointers_out.empty()) throw ContractViolation("pointers array must hold num_vertices + 1 entries");
  const std::size_t n = pointers_out.size() - 1;
  validate_direction(n, pointers_out, neighbors_out, "out");
  validate_direction(n, pointers_in, neighbors_in, "in");
  if (neighbors_out.size() != neighbors_in.size())
    throw ContractViolation("out and in edge counts differ");

  // Every out-edge (u, v) must appear as in-edge of v: count-match per target.
  std::vector<Offset> cursor(pointers_in.begin(), pointers_in.end() - 1);
  for (std::size_t u = 0; u < n; ++u) {
    for (Offset i = pointers_out[u]; i < pointers_out[u + 1]; ++i) {
      const VertexId v = neighbors_out[i];
      if (cursor[v] >= pointers_in[v + 1] || neighbors_in[cursor[v]] != u)
        throw ContractViolation("out and in structures hold different edges");
      ++cursor[v];
    }
  }

  CsrGraph g;
  g.pointers_out_ = std::move(pointers_out);
  g.neighbors_out_ = std::move(neighbors_out);
  g.pointers_in_ = std::move(pointers_in);
  g.neighbors_in_ = std::move(neighbors_in);
  g.symmetric_ = g.pointers_out_ == g.pointers_in_ && g.neighbors_out_ == g.neighbors_in_;
  return g;
}

CsrGraph CsrGraph::from_dense_edges(VertexId num_vertices,
                                    std::vector<std::pair<VertexId, VertexId>> edges) {
  for (const auto& [u, v] : edges)
    if (u >= num_vertices || v >= num_vertices) throw ContractViolation("edge endpoint out of range");
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  CsrGraph g;
  fill_csr(num_vertices, edges, g.pointers_out_, g.neighbors_out_);
  for (auto& e : edges) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  fill_csr(num_vertices, edges, g.pointers_in_, g.neighbors_in_);
  g.symmetric_ = g.pointers_out_ == g.pointers_in_ && g.neighbors_out_ == g.neighbors_in_;
  return g;
}

std::span<const VertexId> CsrGraph::adjacent(VertexId v, Direction d) const {
  if (v >= num_vertices()) throw ContractViolation("vertex id out of range");
  const auto p = pointers(d);
  return neighbors(d).subspan(p[v], p[v + 1] - p[v]);
}

Offset CsrGraph::degree(VertexId v, Direction d) const {
  if (v >= num_vertices()) throw ContractViolation("vertex id out of range");
  const auto p = pointers(d);
  return p[v + 1] - p[v];
}

bool CsrGraph::has_edge(VertexId u, VertexId v) const {
  const auto adj = adjacent(u, Direction::Out);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<std::pair<VertexId, VertexId>> CsrGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(num_edges());
  for (VertexId u = 0; u < num_vertices(); ++u)
    for (VertexId v : adjacent(u, Direction::Out)) out.emplace_back(u, v);
  return out;
}

std::span<const VertexId> CsrGraph::array(ArrayId id) const {
  switch (id) {
    case ArrayId::NeighborsOut: return neighbors_out_;
    case ArrayId::NeighborsIn: return neighbors_in_;
    case ArrayId::PointersOut: return pointers_out_;
    case ArrayId::PointersIn: return pointers_in_;
    case ArrayId::Other: break;
  }
  return {};
}

std::vector<RawId> dense_id_table(const EdgeList& edges) {
  std::vector<RawId> ids;
  ids.reserve(edges.edges.size() * 2);
  for (const auto& [u, v] : edges.edges) {
    ids.push_back(u);
    ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

CsrGraph build_csr(const EdgeList& edges) {
  const auto ids = dense_id_table(edges);
  if (ids.size() >= std::numeric_limits<VertexId>::max())
    throw ConfigError("too many distinct vertices for 32-bit ids");
  auto dense = [&ids](RawId raw) {
    return static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), raw) - ids.begin());
  };
  std::vector<std::pair<VertexId, VertexId>> mapped;
  mapped.reserve(edges.edges.size() * (edges.directed ? 1 : 2));
  for (const auto& [u, v] : edges.edges) {
    mapped.emplace_back(dense(u), dense(v));
    if (!edges.directed) mapped.emplace_back(dense(v), dense(u));
  }
  return CsrGraph::from_dense_edges(static_cast<VertexId>(ids.size()), std::move(mapped));
}

CsrGraph make_undirected(const CsrGraph& g) {
  if (g.symmetric()) return g;
  auto edges = g.edges();
  const std::size_t original = edges.size();
  edges.reserve(original * 2);
  for (std::size_t i = 0; i < original; ++i) edges.emplace_back(edges[i].second, edges[i].first);
  return CsrGraph::from_dense_edges(g.num_vertices(), std::move(edges));
}

CsrGraph relabel(const CsrGraph& g, std::span<const VertexId> permutation) {
  if (permutation.size() != g.num_vertices()) throw ContractViolation("permutation size mismatch");
  auto edges = g.edges();
  for (auto& [u, v] : edges) {
    u = permutation[u];
    v = permutation[v];
  }
  return CsrGraph::from_dense_edges(g.num_vertices(), std::move(edges));
}

std::vector<VertexId> invert_permutation(std::span<const VertexId> permutation) {
  std::vector<VertexId> inverse(permutation.size(), std::numeric_limits<VertexId>::max());
  for (std::size_t i = 0; i < permutation.size(); ++i) {
    const VertexId target = permutation[i];
    if (target >= permutation.size() || inverse[target] != std::numeric_limits<VertexId>::max())
      throw ContractViolation("not a permutation");
    inverse[target] = static_cast<VertexId>(i);
  }
  return inverse;
}

std::vector<VertexId> stride_permutation(VertexId num_vertices, VertexId stride) {
  if (stride == 0) throw ContractViolation("stride must be at least 1");
  std::vector<VertexId> permutation(num_vertices);
  VertexId next = 0;
  for (VertexId start = 0; start < stride && start < num_vertices; ++start)
    for (std::uint64_t v = start; v < num_vertices; v += stride) permutation[v] = next++;
  return permutation;
}

StrideMapping stride_map(const CsrGraph& g, VertexId stride) {
  auto permutation = stride_permutation(g.num_vertices(), stride);
  auto graph = relabel(g, permutation);
  return {std::move(graph), std::move(permutation)};
}

std::vector<VertexInterval> partition_vertices(VertexId num_vertices, unsigned p) {
  if (p == 0) throw ContractViolation("partition count must be at least 1");
  std::vector<VertexInterval> parts;
  parts.reserve(p);
  // The first (n mod p) intervals take one extra vertex.
  const VertexId base = num_vertices / p;
  const VertexId extra = num_vertices % p;
  VertexId lo = 0;
  for (unsigned i = 0; i < p; ++i) {
    const VertexId len = base + (i < extra ? 1 : 0);
    parts.push_back({lo, lo + len});
    lo += len;
  }
  return parts;
}

SetRef neighborhood(const CsrGraph& g, VertexId v, Direction d) {
  if (v >= g.num_vertices()) throw ContractViolation("vertex id out of range");
  const auto p = g.pointers(d);
  return {neighbors_array(d), p[v], p[v + 1] - p[v]};
}

void write_csr_binary(const CsrGraph& g, std::ostream& out) {
  out.write(kMagic.data(), kMagic.size());
  put_u32(out, g.num_vertices());
  put_u32(out, static_cast<std::uint32_t>(g.num_edges()));
  for (Direction d : {Direction::Out, Direction::In}) {
    for (Offset p : g.pointers(d)) put_u32(out, p);
    for (VertexId v : g.neighbors(d)) put_u32(out, v);
  }
  if (!out) throw IoError("failed to write binary CSR dump");
}

CsrGraph read_csr_binary(std::istream& in) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic)
    throw ParseError("not a binary CSR dump (bad magic)");
  const std::uint32_t n = get_u32(in);
  const std::uint32_t m = get_u32(in);
  auto pointers_out = get_array(in, static_cast<std::size_t>(n) + 1);
  auto neighbors_out = get_array(in, m);
  auto pointers_in = get_array(in, static_cast<std::size_t>(n) + 1);
  auto neighbors_in = get_array(in, m);
  try {
    return CsrGraph::from_arrays(std::move(pointers_out), std::move(neighbors_out), std::move(pointers_in),
                                 std::move(neighbors_in));
  } catch (const ContractViolation& e) {
    throw ParseError(std::string("corrupt binary CSR dump: ") + e.what());
  }
}

CsrGraph load_graph_file(const std::string& path, bool directed) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  const bool binary = in.gcount() == 4 && magic == kMagic;
  in.clear();
  in.seekg(0);
  if (binary) {
    auto g = read_csr_binary(in);
    return directed ? g : make_undirected(g);
  }
  return build_csr(load_edge_list(in, directed));
}

}  // namespace subq
