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

// Frozen values. Semilattice sizes come from the closed form
// sum_k C(n,k) sum_b S(k,b) |G|^(k-b) (Stirling numbers of the second kind);
// lattice sizes for Z2.K3 and Z2.C4 from a separate brute-force script that
// computes ranks from circle gains over every edge subset.

#include <gtest/gtest.h>

#include "rhodes/latticekit.hpp"
#include "rhodes/semilattice.hpp"
#include "test_support.hpp"

namespace rhodes {
namespace {

using testing::expansion;

TEST(Oracle, SemilatticeSizes) {
  EXPECT_EQ(enumerate_pp(expansion("K3", 1)).elements.size(), 15u);
  EXPECT_EQ(enumerate_pp(expansion("K3", 2)).elements.size(), 24u);
  EXPECT_EQ(enumerate_pp(expansion("K3", 3)).elements.size(), 35u);
  EXPECT_EQ(enumerate_pp(expansion("K4", 2)).elements.size(), 116u);
  EXPECT_EQ(enumerate_pp(expansion("K4", 3)).elements.size(), 214u);
}

TEST(Oracle, Z6K4BalancedElements) {
  const auto rb = enumerate_graphic(make_fixture(Fixture::kZ6K4)).elements;
  EXPECT_EQ(rb.size(), 772u);
  std::size_t spanning = 0;
  for (const auto& s : rb) spanning += s.vertices.count() == 4;
  EXPECT_EQ(spanning, 505u);
}

struct Sizes {
  const char* base;
  std::size_t classic, frame, lift, semiclosed;
};

TEST(Oracle, LatticeSizes) {
  for (const Sizes& s : {Sizes{"K3", 25, 31, 31, 31}, Sizes{"C4", 97, 129, 123, 163}}) {
    const BiasedGraph omega = from_gains(expansion(s.base, 2));
    EXPECT_EQ(rhodes_lattice(LatticeKind::kClassic, omega).size(), s.classic) << s.base;
    EXPECT_EQ(rhodes_lattice(LatticeKind::kFrame, omega).size(), s.frame) << s.base;
    EXPECT_EQ(rhodes_lattice(LatticeKind::kLift, omega).size(), s.lift) << s.base;
    EXPECT_EQ(rhodes_lattice(LatticeKind::kSemiclosed, omega).size(), s.semiclosed) << s.base;
  }
}

TEST(Oracle, ParallelPairFrame) {
  // Two vertices joined by an unbalanced digon.
  const Multigraph g({0, 1}, {{0, 0, 1}, {1, 0, 1}});
  EXPECT_EQ(frame_rhodes_lattice(BiasedGraph(g, {})).size(), 7u);
}

}  // namespace
}  // namespace rhodes
