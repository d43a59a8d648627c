// Copyright 2026 The subq Authors
// SPDX-License-Identifier: Apache-2.0

#include "subq/query.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "subq/intersect.hpp"

namespace subq {

const char* to_string(MatchMode m) { return m == MatchMode::Homomorphism ? "hom" : "iso"; }

MatchMode parse_match_mode(const std::string& text) {
  if (text == "hom" || text == "homomorphism") return MatchMode::Homomorphism;
  if (text == "iso" || text == "isomorphism") return MatchMode::Isomorphism;
  throw QueryError("unknown match mode '" + text + "' (expected hom or iso)");
}

bool QueryGraph::has_edge(unsigned a, unsigned b) const {
  if (!directed && a > b) std::swap(a, b);
  const std::pair<QueryVertex, QueryVertex> e{static_cast<QueryVertex>(a), static_cast<QueryVertex>(b)};
  return std::binary_search(edges.begin(), edges.end(), e);
}

unsigned QueryGraph::out_degree(unsigned v) const {
  unsigned d = 0;
  for (const auto& [a, b] : edges) d += (a == v) + (!directed && b == v);
  return d;
}

unsigned QueryGraph::in_degree(unsigned v) const {
  if (!directed) return out_degree(v);
  unsigned d = 0;
  for (const auto& e : edges) d += e.second == v;
  return d;
}

QueryGraph parse_query(const std::vector<std::pair<unsigned, unsigned>>& edges, bool directed, MatchMode mode,
                       unsigned max_levels) {
  if (max_levels > kSlotCapacity)
    throw ConfigError("level capacity is limited to " + std::to_string(kSlotCapacity));
  if (edges.empty()) throw QueryError("query has no edges");
  unsigned n = 0;
  for (const auto& [a, b] : edges) {
    if (a == b) throw QueryError("query self-loop on vertex " + std::to_string(a));
    n = std::max({n, a + 1, b + 1});
  }
  if (n > max_levels)
    throw QueryError("query has " + std::to_string(n) + " vertices, instance supports " +
                     std::to_string(max_levels));

  QueryGraph q;
  q.num_vertices = n;
  q.directed = directed;
  q.mode = mode;
  for (auto [a, b] : edges) {
    if (!directed && a > b) std::swap(a, b);
    q.edges.emplace_back(static_cast<QueryVertex>(a), static_cast<QueryVertex>(b));
  }
  std::sort(q.edges.begin(), q.edges.end());
  q.edges.erase(std::unique(q.edges.begin(), q.edges.end()), q.edges.end());
  if (directed)
    for (const auto& [a, b] : q.edges)
      if (q.has_edge(b, a))
        throw QueryError("reciprocal query edges between " + std::to_string(a) + " and " + std::to_string(b));

  std::vector<bool> seen(n, false);
  std::vector<unsigned> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const unsigned v = stack.back();
    stack.pop_back();
    for (unsigned w = 0; w < n; ++w)
      if (!seen[w] && q.adjacent(v, w)) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw QueryError("query graph is disconnected or its vertex ids are not dense");
  return q;
}

std::string to_string(const Qvo& qvo) {
  std::string s;
  for (std::size_t i = 0; i < qvo.order.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(qvo.order[i]);
  }
  return s;
}

Qvo parse_qvo(const std::string& text) {
  Qvo qvo;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size() || v >= kSlotCapacity) throw QueryError("");
      qvo.order.push_back(static_cast<QueryVertex>(v));
    } catch (const std::exception&) {
      throw QueryError("malformed query vertex ordering '" + text + "'");
    }
  }
  return qvo;
}

bool is_valid_qvo(const QueryGraph& q, const Qvo& qvo) {
  if (qvo.order.size() != q.num_vertices) return false;
  std::vector<bool> used(q.num_vertices, false);
  for (auto v : qvo.order) {
    if (v >= q.num_vertices || used[v]) return false;
    used[v] = true;
  }
  if (!q.adjacent(qvo.order[0], qvo.order[1])) return false;
  for (std::size_t i = 2; i < qvo.order.size(); ++i) {
    bool linked = false;
    for (std::size_t j = 0; j < i && !linked; ++j) linked = q.adjacent(qvo.order[j], qvo.order[i]);
    if (!linked) return false;
  }
  return true;
}

std::vector<Qvo> enumerate_qvos(const QueryGraph& q) {
  Qvo candidate;
  candidate.order.resize(q.num_vertices);
  std::iota(candidate.order.begin(), candidate.order.end(), QueryVertex{0});
  std::vector<Qvo> out;
  do {
    if (is_valid_qvo(q, candidate)) out.push_back(candidate);
  } while (std::next_permutation(candidate.order.begin(), candidate.order.end()));
  return out;
}

QueryFile load_query(std::istream& in, unsigned max_levels) {
  bool directed = true;
  MatchMode mode = MatchMode::Isomorphism;
  std::optional<Qvo> qvo;
  std::vector<std::pair<unsigned, unsigned>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first.front() == '#') continue;
    if (first.front() == '%') {
      std::string value;
      ls >> value;
      try {
        if (first == "%directed") {
          if (value != "true" && value != "false") throw QueryError("expected true or false");
          directed = value == "true";
        } else if (first == "%mode") {
          mode = parse_match_mode(value);
        } else if (first == "%qvo") {
          qvo = parse_qvo(value);
        }
      } catch (const QueryError& e) {
        throw ParseError(e.what(), line_no);
      }
      continue;
    }
    std::istringstream edge_stream(line);
    long long a = -1, b = -1;
    std::string extra;
    if (!(edge_stream >> a >> b) || (edge_stream >> extra) || a < 0 || b < 0 || a >= 256 || b >= 256)
      throw ParseError("expected two small non-negative query vertex ids", line_no);
    edges.emplace_back(static_cast<unsigned>(a), static_cast<unsigned>(b));
  }
  QueryFile file{parse_query(edges, directed, mode, max_levels), qvo};
  if (file.qvo && !is_valid_qvo(file.graph, *file.qvo))
    throw QueryError("query vertex ordering " + to_string(*file.qvo) + " is not valid for this query");
  return file;
}

QueryFile load_query_file(const std::string& path, unsigned max_levels) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return load_query(in, max_levels);
}

DegreeThreshold prune_threshold_for(const QueryGraph& q, unsigned query_vertex) {
  DegreeThreshold t{q.out_degree(query_vertex), q.in_degree(query_vertex)};
  if (q.mode == MatchMode::Homomorphism) {
    t.out = std::min(t.out, 1u);
    t.in = std::min(t.in, 1u);
  }
  return t;
}

QueryPlan plan_query(const QueryGraph& q, const Qvo& qvo) {
  if (!is_valid_qvo(q, qvo)) throw QueryError("query vertex ordering " + to_string(qvo) + " is not valid");
  QueryPlan plan;
  plan.qvo = qvo;
  plan.mode = q.mode;
  plan.directed = q.directed;
  plan.num_levels = q.num_vertices;
  for (auto v : qvo.order) plan.thresholds.push_back(prune_threshold_for(q, v));

  const auto& order = qvo.order;
  plan.source.direction = (!q.directed || q.has_edge(order[0], order[1])) ? Direction::Out : Direction::In;
  plan.source.first = plan.thresholds[0];
  plan.source.second = plan.thresholds[1];

  // Direction of the metadata each slot currently carries.
  std::vector<std::optional<Direction>> carried(q.num_vertices);
  carried[0] = plan.source.direction;

  for (unsigned level = 2; level < q.num_vertices; ++level) {
    ExtensionStep step;
    step.level = level;
    step.prune_threshold = plan.thresholds[level];
    step.distinct_check = q.mode == MatchMode::Isomorphism;
    const unsigned added = order[level];
    for (unsigned slot = 0; slot < level; ++slot) {
      const unsigned earlier = order[slot];
      const auto s = static_cast<std::uint8_t>(slot);
      if (!q.directed) {
        if (q.has_edge(earlier, added)) step.intersect_inputs.push_back({s, Direction::Out});
        continue;
      }
      if (q.has_edge(earlier, added)) step.intersect_inputs.push_back({s, Direction::Out});
      if (q.has_edge(added, earlier)) step.intersect_inputs.push_back({s, Direction::In});
    }
    if (step.intersect_inputs.size() > kMaxIntersectInputs)
      throw QueryError("level " + std::to_string(level) + " of ordering " + to_string(qvo) + " needs " +
                       std::to_string(step.intersect_inputs.size()) + " intersection inputs, at most " +
                       std::to_string(kMaxIntersectInputs) + " are supported");
    for (const auto& input : step.intersect_inputs) {
      if (carried[input.slot] != input.dir) {
        step.refetch.push_back(input);
        carried[input.slot] = input.dir;
      }
    }
    plan.steps.push_back(std::move(step));
  }
  return plan;
}

Qvo default_qvo(const QueryGraph& q) {
  for (const auto& qvo : enumerate_qvos(q)) {
    try {
      plan_query(q, qvo);
      return qvo;
    } catch (const QueryError&) {
    }
  }
  throw QueryError("no query vertex ordering fits the intersector fan-in");
}

}  // namespace subq
