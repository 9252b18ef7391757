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

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "rhodes/error.hpp"
#include "rhodes/matroid.hpp"
#include "test_support.hpp"

namespace rhodes {
namespace {

using testing::expansion;
using testing::for_each_edge_subset;
using testing::random_gain_graph;
using testing::random_subset;

TEST(Rank, KnownValues) {
  const BiasedGraph omega = from_gains(expansion("K3", 2));
  const Multigraph& g = omega.graph();
  const Bitset all = g.all_vertices();
  EXPECT_EQ(frame_rank(omega, all, g.no_edges()), 0);
  EXPECT_EQ(lift_rank(omega, all, g.no_edges()), 0);
  // An unbalanced digon: frame rank 2, lift rank 2.
  EXPECT_EQ(frame_rank(omega, all, Bitset(6, {0, 1})), 2);
  EXPECT_EQ(lift_rank(omega, all, Bitset(6, {0, 1})), 2);
  // Everything: frame rank n, lift rank n.
  EXPECT_EQ(frame_rank(omega, all, g.all_edges()), 3);
  EXPECT_EQ(lift_rank(omega, all, g.all_edges()), 3);
  // A balanced triangle 0-1-2 has rank 2 in both.
  EXPECT_EQ(frame_rank(omega, all, Bitset(6, {0, 2, 4})), 2);
  // Isolated vertices count as balanced components.
  EXPECT_EQ(frame_rank(omega, Bitset(3, {0, 1}), Bitset(6, {0})), 1);
}

TEST(Rank, RejectsEdgesOutsideGround) {
  const BiasedGraph omega = from_gains(expansion("K3", 2));
  EXPECT_THROW(frame_rank(omega, Bitset(3, {0}), Bitset(6, {0})), InvalidInput);
  EXPECT_THROW(lift_rank(omega, Bitset(2), Bitset(6)), InvalidInput);
}

TEST(Rank, AxiomsOnRandomHosts) {
  std::mt19937 rng(99);
  for (int host = 0; host < 5; ++host) {
    const GainGraph phi = random_gain_graph(rng, 5, 10 + host, 2 + host % 3, true);
    const BiasedGraph omega = from_gains(phi);
    const auto& g = omega.graph();
    const Bitset v = g.all_vertices();
    for (MatroidKind kind : {MatroidKind::kFrame, MatroidKind::kLift})
      for (int sample = 0; sample < 100; ++sample) {
        const Bitset s = random_subset(rng, g.all_edges());
        const Bitset t = random_subset(rng, g.all_edges());
        const int rs = rank(kind, omega, v, s);
        EXPECT_GE(rs, 0);
        EXPECT_LE(rs, static_cast<int>(s.count()));
        EXPECT_LE(rank(kind, omega, v, s & t), rs);  // monotone
        EXPECT_LE(rank(kind, omega, v, s | t) + rank(kind, omega, v, s & t),
                  rs + rank(kind, omega, v, t));
        const Bitset cl = closure(kind, omega, v, s);
        EXPECT_TRUE(s.is_subset_of(cl));
        EXPECT_EQ(closure(kind, omega, v, cl), cl);
        EXPECT_EQ(rank(kind, omega, v, cl), rs);
      }
  }
}

TEST(Flats, BfsMatchesBruteForce) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const GainGraph phi = random_gain_graph(rng, 4, 6 + trial % 4, 2 + trial % 3, true);
    const BiasedGraph omega = from_gains(phi);
    const auto& g = omega.graph();
    const Bitset x = random_subset(rng, g.all_vertices());
    for (MatroidKind kind : {MatroidKind::kFrame, MatroidKind::kLift}) {
      std::set<std::vector<int>> expected;
      for_each_edge_subset(g.edges_within(x), [&](const Bitset& s) {
        if (is_flat(kind, omega, x, s)) expected.insert(s.members());
      });
      std::set<std::vector<int>> got;
      for (const auto& f : flats(kind, omega, x)) got.insert(f.members());
      EXPECT_EQ(got, expected);
    }
  }
}

TEST(Flats, FrameAndLiftDifferOnC4) {
  const GainGraph phi = expansion("C4", 2);
  const BiasedGraph omega = from_gains(phi);
  const auto& g = phi.graph();
  const Bitset all = g.all_vertices();
  // Base edge 0 is (0,1), base edge 2 is (2,3). Two unbalanced digons: an
  // edge between them keeps frame rank but raises lift rank.
  const Bitset both(8, {0, 1, 4, 5});
  EXPECT_FALSE(is_flat(MatroidKind::kFrame, omega, all, both));
  EXPECT_EQ(closure(MatroidKind::kFrame, omega, all, both), g.all_edges());
  EXPECT_TRUE(is_flat(MatroidKind::kLift, omega, all, both));
  // One unbalanced digon plus a single edge: a parallel edge on the single
  // edge keeps lift rank but raises frame rank.
  const Bitset single(8, {0, 1, 4});
  EXPECT_TRUE(is_flat(MatroidKind::kFrame, omega, all, single));
  EXPECT_EQ(closure(MatroidKind::kLift, omega, all, single), both);
}

TEST(MatroidKind, Names) {
  EXPECT_EQ(matroid_kind_from_string("lift"), MatroidKind::kLift);
  EXPECT_EQ(to_string(MatroidKind::kFrame), "frame");
  EXPECT_THROW(matroid_kind_from_string("graphic"), InvalidInput);
}

}  // namespace
}  // namespace rhodes
