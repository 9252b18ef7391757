// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "rhodes/error.hpp"
#include "rhodes/multigraph.hpp"
#include "test_support.hpp"

namespace rhodes {
namespace {

using testing::for_each_edge_subset;
using testing::random_multigraph;

// Degrees within an edge subset; a loop adds two.
std::vector<int> degrees(const Multigraph& g, const Bitset& edges) {
  std::vector<int> d(g.num_vertices(), 0);
  edges.for_each([&](std::size_t e) {
    ++d[g.edge(static_cast<int>(e)).tail];
    ++d[g.edge(static_cast<int>(e)).head];
  });
  return d;
}

bool connected_edges(const Multigraph& g, const Bitset& edges, int skip = -1) {
  Subgraph s{g.endpoints(edges), edges};
  if (skip >= 0) {
    s.vertices.reset(skip);
    Bitset kept(edges.size());
    edges.for_each([&](std::size_t e) {
      const Edge& x = g.edge(static_cast<int>(e));
      if (x.tail != skip && x.head != skip) kept.set(e);
    });
    s.edges = kept;
  }
  return components(g, s).num_blocks() <= 1;
}

// Circle: connected, every touched vertex of degree 2.
bool brute_is_circle(const Multigraph& g, const Bitset& edges) {
  if (edges.none() || !connected_edges(g, edges)) return false;
  const auto d = degrees(g, edges);
  return std::all_of(d.begin(), d.end(), [](int x) { return x == 0 || x == 2; });
}

// Theta: loopless, connected, two vertices of degree 3 and the rest 2, and
// no cut vertex (which rules out handcuffs).
bool brute_is_theta(const Multigraph& g, const Bitset& edges) {
  if (edges.none() || !connected_edges(g, edges)) return false;
  bool loop = false;
  edges.for_each([&](std::size_t e) { loop = loop || g.edge(static_cast<int>(e)).is_loop(); });
  if (loop) return false;
  const auto d = degrees(g, edges);
  int threes = 0;
  for (int x : d) {
    if (x == 3) ++threes;
    else if (x != 0 && x != 2) return false;
  }
  if (threes != 2) return false;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (d[v] > 0 && !connected_edges(g, edges, v)) return false;
  return true;
}

TEST(Multigraph, DenseIndicesAndLookups) {
  const Multigraph g({7, 3, 5}, {{10, 7, 3}, {11, 3, 3}, {12, 5, 7}});
  EXPECT_EQ(g.vertex_ids(), std::vector<int>({3, 5, 7}));
  EXPECT_EQ(g.vertex_index(7), 2);
  EXPECT_EQ(g.edge_index(12), 2);
  EXPECT_TRUE(g.edge(1).is_loop());
  EXPECT_TRUE(g.has_loops());
  EXPECT_THROW(g.vertex_index(4), InvalidInput);
  EXPECT_THROW(g.edge_index(99), InvalidInput);
  EXPECT_EQ(g.incident(0).size(), 2u);
}

TEST(Multigraph, RejectsBadInput) {
  EXPECT_THROW(Multigraph({0, 0}, {}), InvalidInput);
  EXPECT_THROW(Multigraph({0, 1}, {{0, 0, 2}}), InvalidInput);
  EXPECT_THROW(Multigraph({0, 1}, {{0, 0, 1}, {0, 1, 0}}), InvalidInput);
  EXPECT_THROW(base_graph_from_shorthand("Q4"), InvalidInput);
  EXPECT_THROW(cycle_graph(2), InvalidInput);
}

TEST(Multigraph, BaseGraphs) {
  const Multigraph k4 = complete_graph(4);
  EXPECT_EQ(k4.num_edges(), 6);
  EXPECT_EQ(k4.edge(0).tail, 0);
  EXPECT_EQ(k4.edge(5).head, 3);
  const Multigraph c4 = cycle_graph(4);
  EXPECT_EQ(c4.edge(3).tail, 3);
  EXPECT_EQ(c4.edge(3).head, 0);
  const Multigraph p2 = base_graph_from_shorthand("P2");
  EXPECT_EQ(p2.num_vertices(), 3);
  EXPECT_EQ(p2.num_edges(), 2);
}

TEST(Multigraph, SubgraphValidation) {
  const Multigraph k3 = complete_graph(3);
  Subgraph s{Bitset(3, {0, 1}), Bitset(3, {0})};
  EXPECT_NO_THROW(validate_subgraph(k3, s));
  s.edges.set(2);  // edge (1,2) leaves the vertex set
  EXPECT_THROW(validate_subgraph(k3, s), InvalidInput);
  EXPECT_THROW(validate_subgraph(k3, {Bitset(2), Bitset(3)}), InvalidInput);
  EXPECT_EQ(induced_subgraph(k3, std::vector<int>{0, 2}).edges.members(),
            std::vector<int>({1}));
}

TEST(Multigraph, ComponentsKeepIsolatedVertices) {
  const Multigraph p3 = path_graph(3);
  const PartialPartition c = components(p3, {Bitset(4, {0, 1, 3}), Bitset(3, {0})});
  EXPECT_EQ(c, PartialPartition(4, {{0, 1}, {3}}));
}

TEST(Circles, KnownCounts) {
  EXPECT_EQ(circles(complete_graph(4)).size(), 7u);
  EXPECT_EQ(circles(complete_graph(5)).size(), 37u);
  EXPECT_EQ(circles(cycle_graph(5)).size(), 1u);
  // Three parallel edges: three digons.
  const Multigraph par({0, 1}, {{0, 0, 1}, {1, 1, 0}, {2, 0, 1}});
  EXPECT_EQ(circles(par).size(), 3u);
  EXPECT_EQ(theta_subgraphs(par).size(), 1u);
  EXPECT_EQ(theta_subgraphs(complete_graph(4)).size(), 6u);
}

TEST(Circles, LoopsAndDigonsCanonical) {
  const Multigraph g({0, 1}, {{0, 1, 1}, {1, 1, 0}, {2, 0, 1}});
  const auto cs = circles(g);
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[0].edges, std::vector<int>({0}));
  EXPECT_EQ(cs[0].vertices, std::vector<int>({1}));
  EXPECT_EQ(cs[1].edges, std::vector<int>({1, 2}));
  EXPECT_EQ(cs[1].vertices.front(), 1);  // tail of edge 1
}

TEST(Circles, CanonicalFormIsUnique) {
  const Multigraph k4 = complete_graph(4);
  // Triangle 0-1-2 walked four ways.
  const Circle a = make_circle(k4, {0, 3, 1}, 0);
  const Circle b = make_circle(k4, {3, 1, 0}, 1);
  const Circle c = make_circle(k4, {1, 3, 0}, 0);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  EXPECT_EQ(a.edges.front(), 0);
  EXPECT_LT(a.edges[1], a.edges.back());
  EXPECT_TRUE(is_valid_circle(k4, a));
  EXPECT_THROW(make_circle(k4, {0, 3}, 0), InvalidInput);
  EXPECT_THROW(circle_from_edge_set(k4, Bitset(6, {0, 1, 2})), InvalidInput);
}

TEST(Circles, MatchBruteForceOnRandomMultigraphs) {
  std::mt19937 rng(20260101);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 4;
    const int m = 3 + trial % 8;
    const Multigraph g = random_multigraph(rng, n, m, trial % 2 == 0);
    std::set<std::vector<int>> expected;
    for_each_edge_subset(g.all_edges(), [&](const Bitset& s) {
      if (brute_is_circle(g, s)) expected.insert(s.members());
    });
    std::set<std::vector<int>> got;
    for (const auto& c : circles(g)) {
      EXPECT_TRUE(is_valid_circle(g, c));
      EXPECT_TRUE(got.insert(c.edge_set(g.num_edges()).members()).second);
    }
    EXPECT_EQ(got, expected) << "trial " << trial;
  }
}

TEST(Thetas, MatchBruteForceOnRandomMultigraphs) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 4;
    const int m = 3 + trial % 8;
    const Multigraph g = random_multigraph(rng, n, m, trial % 3 == 0);
    std::set<std::vector<int>> expected;
    for_each_edge_subset(g.all_edges(), [&](const Bitset& s) {
      if (brute_is_theta(g, s)) expected.insert(s.members());
    });
    std::set<std::vector<int>> got;
    for_each_theta(g, [&](const Theta& t) {
      Bitset u(g.num_edges());
      for (const auto& c : t.circles) u |= c.edge_set(g.num_edges());
      EXPECT_EQ(u, t.edges);
      EXPECT_TRUE(got.insert(t.edges.members()).second);
    });
    EXPECT_EQ(got, expected) << "trial " << trial;
  }
}

TEST(Circles, Guarded) {
  ScaleGuard guard;
  guard.max_circles = 5;
  EXPECT_THROW(circles(complete_graph(4), guard), GuardExceeded);
}

TEST(SpanningForest, FundamentalCircleCount) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Multigraph g = random_multigraph(rng, 5, 9, true);
    const Subgraph s{g.all_vertices(), testing::random_subset(rng, g.all_edges())};
    const auto f = spanning_forest(g, s);
    const int c = components(g, s).num_blocks();
    EXPECT_EQ(f.num_components, c);
    EXPECT_EQ(static_cast<int>(f.fundamental.size()),
              static_cast<int>(s.edges.count()) - g.num_vertices() + c);
    for (const auto& [comp, circle] : f.fundamental) {
      EXPECT_TRUE(is_valid_circle(g, circle));
      EXPECT_TRUE(circle.edge_set(g.num_edges()).is_subset_of(s.edges));
    }
  }
}

TEST(SimplePaths, CountOnK4) {
  // Between two vertices of K4: 1 direct, 2 of length 2, 2 of length 3.
  EXPECT_EQ(simple_paths(complete_graph(4), complete_graph(4).all_edges(), 0, 3).size(), 5u);
}

}  // namespace
}  // namespace rhodes
