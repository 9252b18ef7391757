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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "rhodes/error.hpp"
#include "rhodes/semilattice.hpp"
#include "test_support.hpp"

namespace rhodes {
namespace {

using testing::expansion;

PotentialFunction values(const std::vector<std::optional<int>>& v) {
  PotentialFunction f(static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) f.values[i] = GroupElement(*v[i]);
  return f;
}

TEST(BMap, PicksEdgesMatchingThePotential) {
  const GainGraph phi = expansion("K3", 2);
  const auto p = make_pp_pair(phi.group(), PartialPartition(3, {{0, 1}, {2}}),
                              values({0, 1, 0}));
  const Subgraph b = b_map(phi, p);
  EXPECT_EQ(b.vertices.members(), std::vector<int>({0, 1, 2}));
  // Base edge (0,1) with gain 1 has id 1.
  EXPECT_EQ(b.edges.members(), std::vector<int>({phi.graph().edge_index(1)}));
  EXPECT_TRUE(is_phi_connected(phi, p));
}

TEST(BMap, DisconnectedBlockOnCycle) {
  // {0, 2} in C4 has no edge inside, so the pair is not phi-connected.
  const GainGraph phi = expansion("C4", 2);
  const auto p = make_pp_pair(phi.group(), PartialPartition(4, {{0, 2}}),
                              values({0, std::nullopt, 1, std::nullopt}));
  EXPECT_FALSE(is_phi_connected(phi, p));
}

TEST(PairOrder, RefinementAndRestriction) {
  const GroupTable z3 = make_cyclic(3);
  const auto upper = make_pp_pair(z3, PartialPartition(3, {{0, 1, 2}}), values({0, 1, 2}));
  const auto good = make_pp_pair(z3, PartialPartition(3, {{1, 2}}),
                                 values({std::nullopt, 0, 1}));
  const auto bad = make_pp_pair(z3, PartialPartition(3, {{1, 2}}),
                                values({std::nullopt, 0, 2}));
  EXPECT_TRUE(pair_leq(z3, good, upper));
  EXPECT_FALSE(pair_leq(z3, bad, upper));
  EXPECT_FALSE(pair_leq(z3, upper, good));
  EXPECT_TRUE(pair_leq(z3, upper, upper));
}

TEST(PairOf, InvertsBMap) {
  for (const char* base : {"K3", "C4", "P2"}) {
    const GainGraph phi = expansion(base, 3);
    for (const auto& p : enumerate_pp(phi).elements) {
      const Subgraph b = b_map(phi, p);
      EXPECT_TRUE(is_closed_balanced(phi, b));
      EXPECT_EQ(pair_of(phi, b), p);
    }
  }
}

TEST(PairOf, RejectsNonClosedOrUnbalanced) {
  const GainGraph phi = expansion("K3", 2);
  const auto& g = phi.graph();
  // Two parallel edges with different gains: unbalanced digon.
  EXPECT_THROW(pair_of(phi, {Bitset(3, {0, 1}), Bitset(6, {0, 1})}), PreconditionError);
  // A path 0-1-2 whose closing edge is missing.
  const Subgraph open{g.all_vertices(), Bitset(6, {0, 4})};
  ASSERT_TRUE(is_balanced_subgraph(phi, open));
  EXPECT_FALSE(is_closed_balanced(phi, open));
  EXPECT_THROW(pair_of(phi, open), PreconditionError);
}

TEST(Closure, ClosedBalancedClosure) {
  const GainGraph phi = expansion("K3", 2);
  const BiasedGraph omega = from_gains(phi);
  const Subgraph open{phi.graph().all_vertices(), Bitset(6, {0, 4})};
  const Subgraph closed = closed_balanced_closure(omega, open);
  EXPECT_TRUE(is_closed_balanced(omega, closed));
  EXPECT_EQ(closed.edges.count(), 3u);
  EXPECT_THROW(closed_balanced_closure(omega, {Bitset(3, {0, 1}), Bitset(6, {0, 1})}),
               PreconditionError);
}

TEST(Enumeration, CountsMatchStirlingOracle) {
  // Sum over partial partitions of |G|^(|supp| - blocks) for complete
  // expansions; 15, 24, 214 for Z1.K3, Z2.K3, Z3.K4.
  EXPECT_EQ(enumerate_pp(expansion("K3", 1)).elements.size(), 15u);
  EXPECT_EQ(enumerate_graphic(expansion("K3", 2)).elements.size(), 24u);
  EXPECT_EQ(enumerate_pp(expansion("K4", 3)).elements.size(), 214u);
}

TEST(Enumeration, OrderIsDeterministic) {
  const GainGraph phi = expansion("K3", 2);
  const auto a = enumerate_graphic(phi).elements;
  EXPECT_EQ(a, enumerate_graphic(phi).elements);
  EXPECT_EQ(a.front(), empty_subgraph(phi.graph()));
  const auto pp = enumerate_pp(phi).elements;
  // Partial partitions appear in enumeration order, reps sorted within each.
  const auto order = all_partial_partitions(3);
  auto rank_of = [&](const PartialPartition& pi) {
    return std::find(order.begin(), order.end(), pi) - order.begin();
  };
  for (std::size_t i = 1; i < pp.size(); ++i) {
    const auto a = rank_of(pp[i - 1].partition()), b = rank_of(pp[i].partition());
    EXPECT_TRUE(a < b || (a == b && pp[i - 1] < pp[i]));
  }
}

TEST(Isomorphism, SmallHosts) {
  for (const char* base : {"K3", "P2", "C4"})
    for (int order : {1, 2, 3}) {
      const auto report = verify_isomorphism(expansion(base, order));
      EXPECT_TRUE(report.ok) << base << " Z" << order << ": "
                             << report.counterexample.value_or("");
      EXPECT_EQ(report.pp_count, report.graphic_count);
    }
}

TEST(Isomorphism, NonExpansionHost) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 15; ++trial) {
    const GainGraph phi = testing::random_gain_graph(rng, 4, 7, 2 + trial % 3);
    const auto report = verify_isomorphism(phi);
    EXPECT_TRUE(report.ok) << report.counterexample.value_or("");
  }
}

TEST(Meet, MatchesIntersection) {
  const GainGraph phi = expansion("C4", 2);
  const auto pp = enumerate_pp(phi).elements;
  bool any_refined = false;
  for (const auto& p : pp)
    for (const auto& q : pp) {
      bool refined = false;
      const auto m = meet_pairs(phi, p, q, &refined);
      any_refined = any_refined || refined;
      EXPECT_EQ(b_map(phi, m), b_map(phi, p).intersect(b_map(phi, q)));
      EXPECT_TRUE(is_phi_connected(phi, m));
    }
  // On C4 the pointwise relation can join opposite vertices.
  EXPECT_TRUE(any_refined);
}

}  // namespace
}  // namespace rhodes
