// Copyright 2026 The subq Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <sstream>

#include "subq/query.hpp"
#include "support.hpp"

namespace subq {
namespace {

using Edges = std::vector<std::pair<unsigned, unsigned>>;

TEST(Query, Triangle) {
  const auto q = testing::triangle(MatchMode::Isomorphism);
  EXPECT_EQ(q.num_vertices, 3u);
  EXPECT_EQ(q.edges.size(), 3u);
  EXPECT_TRUE(q.has_edge(2, 1));
  EXPECT_FALSE(q.has_edge(1, 2));
}

TEST(Query, SingleEdge) {
  const auto q = parse_query({{0, 1}}, true, MatchMode::Isomorphism);
  EXPECT_EQ(q.num_vertices, 2u);
}

TEST(Query, Rejections) {
  EXPECT_THROW(parse_query({{0, 0}}, true, MatchMode::Isomorphism), QueryError);
  EXPECT_THROW(parse_query({}, true, MatchMode::Isomorphism), QueryError);
  EXPECT_THROW(parse_query({{0, 1}, {2, 3}}, true, MatchMode::Isomorphism), QueryError);
  EXPECT_THROW(parse_query({{0, 2}}, true, MatchMode::Isomorphism), QueryError);
  EXPECT_THROW(parse_query({{0, 1}, {1, 0}}, true, MatchMode::Isomorphism), QueryError);
  EXPECT_THROW(parse_query({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}, true, MatchMode::Isomorphism),
               QueryError);
}

TEST(Query, UndirectedDuplicatesCollapse) {
  const auto q = parse_query({{0, 1}, {1, 0}}, false, MatchMode::Homomorphism);
  EXPECT_EQ(q.edges.size(), 1u);
  EXPECT_EQ(q.out_degree(0), 1u);
  EXPECT_EQ(q.in_degree(0), 1u);
}

// Brute force: permutations whose every prefix vertex touches an earlier one.
std::size_t count_valid_orders(const QueryGraph& q) {
  std::vector<unsigned> p(q.num_vertices);
  std::iota(p.begin(), p.end(), 0u);
  std::size_t n = 0;
  do {
    bool ok = true;
    for (std::size_t i = 1; i < p.size() && ok; ++i) {
      bool linked = false;
      for (std::size_t j = 0; j < i; ++j) linked = linked || q.adjacent(p[i], p[j]);
      ok = linked;
    }
    n += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return n;
}

TEST(Qvo, Enumeration) {
  const auto tri = testing::triangle(MatchMode::Isomorphism);
  EXPECT_EQ(enumerate_qvos(tri).size(), 6u);
  const auto path = parse_query({{0, 1}, {1, 2}}, false, MatchMode::Isomorphism);
  const auto orders = enumerate_qvos(path);
  EXPECT_EQ(orders.size(), 4u);
  for (const auto& o : orders) EXPECT_FALSE((o.order[0] == 0 && o.order[1] == 2) || (o.order[0] == 2 && o.order[1] == 0));
  EXPECT_EQ(enumerate_qvos(parse_query({{0, 1}}, true, MatchMode::Isomorphism)).size(), 2u);
  for (const auto& shape : testing::shapes()) {
    const auto q = parse_query(shape, true, MatchMode::Isomorphism);
    EXPECT_EQ(enumerate_qvos(q).size(), count_valid_orders(q));
  }
}

TEST(Qvo, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_qvo("0,2,1")), "0,2,1");
  EXPECT_THROW(parse_qvo("0,x"), QueryError);
  EXPECT_FALSE(is_valid_qvo(testing::triangle(MatchMode::Isomorphism), parse_qvo("0,1")));
  EXPECT_FALSE(is_valid_qvo(testing::triangle(MatchMode::Isomorphism), parse_qvo("0,1,1")));
}

TEST(QueryFile, Directives) {
  std::istringstream in("# t\n%directed false\n%mode hom\n%qvo 1,0,2\n0 1\n1 2\n2 0\n");
  const auto f = load_query(in);
  EXPECT_FALSE(f.graph.directed);
  EXPECT_EQ(f.graph.mode, MatchMode::Homomorphism);
  ASSERT_TRUE(f.qvo.has_value());
  EXPECT_EQ(to_string(*f.qvo), "1,0,2");
}

TEST(QueryFile, Errors) {
  std::istringstream bad_mode("%mode both\n0 1\n");
  EXPECT_THROW(load_query(bad_mode), ParseError);
  std::istringstream bad_edge("0 1 2\n");
  EXPECT_THROW(load_query(bad_edge), ParseError);
  std::istringstream bad_qvo("%qvo 1,2,0\n0 1\n1 2\n");
  EXPECT_NO_THROW(load_query(bad_qvo));
  std::istringstream invalid_qvo("%qvo 0,2,1\n0 1\n1 3\n3 2\n");
  EXPECT_THROW(load_query(invalid_qvo), QueryError);
  EXPECT_THROW(load_query_file("/nonexistent/q.q"), IoError);
}

TEST(Plan, TriangleLevelTwo) {
  const auto plan = plan_query(testing::triangle(MatchMode::Isomorphism), parse_qvo("0,1,2"));
  EXPECT_EQ(plan.source.direction, Direction::Out);
  ASSERT_EQ(plan.steps.size(), 1u);
  EXPECT_EQ(plan.steps[0].intersect_inputs, (std::vector<SlotRef>{{0, Direction::Out}, {1, Direction::In}}));
  EXPECT_EQ(plan.steps[0].refetch, (std::vector<SlotRef>{{1, Direction::In}}));
  EXPECT_EQ(plan.thresholds[0], (DegreeThreshold{2, 0}));
  EXPECT_EQ(plan.thresholds[1], (DegreeThreshold{0, 2}));
  EXPECT_EQ(plan.thresholds[2], (DegreeThreshold{1, 1}));
}

TEST(Plan, ReversedFirstEdgeScansInward) {
  const auto plan = plan_query(testing::triangle(MatchMode::Isomorphism), parse_qvo("1,0,2"));
  EXPECT_EQ(plan.source.direction, Direction::In);
}

TEST(Plan, SingleEdgeIsSourceOnly) {
  const auto plan = plan_query(parse_query({{0, 1}}, true, MatchMode::Isomorphism), parse_qvo("0,1"));
  EXPECT_TRUE(plan.steps.empty());
}

TEST(Plan, Q5LoadsIncomingPointersOfQ2) {
  const auto q = parse_query(testing::shapes()[4], true, MatchMode::Isomorphism);
  const auto plan = plan_query(q, parse_qvo("0,1,2,3"));
  ASSERT_EQ(plan.steps.size(), 2u);
  // Level 2: out(q0) and out(q1).
  EXPECT_EQ(plan.steps[0].intersect_inputs, (std::vector<SlotRef>{{0, Direction::Out}, {1, Direction::Out}}));
  // Level 3: out(q1) and in(q2); q2 carries no metadata yet.
  EXPECT_EQ(plan.steps[1].intersect_inputs, (std::vector<SlotRef>{{1, Direction::Out}, {2, Direction::In}}));
  EXPECT_EQ(plan.steps[1].refetch, (std::vector<SlotRef>{{2, Direction::In}}));
  EXPECT_EQ(plan.thresholds[0].out, 2u);
}

TEST(Plan, HomomorphismThresholdsClampToOne) {
  const auto q = parse_query(testing::shapes()[5], true, MatchMode::Homomorphism);
  for (const auto& t : plan_query(q, default_qvo(q)).thresholds) {
    EXPECT_LE(t.out, 1u);
    EXPECT_LE(t.in, 1u);
  }
}

TEST(Plan, FanInLimit) {
  // Vertex 5 has five earlier neighbors in every ordering ending with it.
  const auto star = parse_query({{0, 5}, {1, 5}, {2, 5}, {3, 5}, {4, 5}, {0, 1}, {1, 2}, {2, 3}, {3, 4}}, true,
                                MatchMode::Isomorphism);
  EXPECT_THROW(plan_query(star, parse_qvo("0,1,2,3,4,5")), QueryError);
  EXPECT_NO_THROW(plan_query(star, default_qvo(star)));
}

// Every query edge feeds exactly one intersection input (the source counts
// for the first edge), and thresholds equal the query degrees.
TEST(PlanProperty, EdgesUsedOnce) {
  for (bool directed : {true, false})
    for (const auto& shape : testing::shapes()) {
      const auto q = parse_query(shape, directed, MatchMode::Isomorphism);
      for (const auto& qvo : enumerate_qvos(q)) {
        QueryPlan plan;
        try {
          plan = plan_query(q, qvo);
        } catch (const QueryError&) {
          continue;
        }
        std::size_t inputs = 1;
        for (const auto& s : plan.steps) inputs += s.intersect_inputs.size();
        EXPECT_EQ(inputs, q.edges.size());
        for (unsigned i = 0; i < q.num_vertices; ++i) {
          const unsigned v = qvo.order[i];
          unsigned out = 0, in = 0;
          for (unsigned w = 0; w < q.num_vertices; ++w) {
            out += directed ? q.has_edge(v, w) : q.adjacent(v, w);
            in += directed ? q.has_edge(w, v) : q.adjacent(v, w);
          }
          EXPECT_EQ(plan.thresholds[i], (DegreeThreshold{out, in}));
        }
      }
    }
}

}  // namespace
}  // namespace subq
