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

#include <gtest/gtest.h>

#include "rhodes/algebra.hpp"
#include "rhodes/error.hpp"

namespace rhodes {
namespace {

TEST(GroupTable, CyclicBasics) {
  const GroupTable z6 = make_cyclic(6);
  EXPECT_EQ(z6.order(), 6);
  EXPECT_EQ(z6.identity(), GroupElement(0));
  EXPECT_EQ(z6.label(), "Z6");
  EXPECT_EQ(z6.compose(GroupElement(4), GroupElement(5)), GroupElement(3));
  for (int g = 0; g < 6; ++g)
    EXPECT_EQ(z6.compose(GroupElement(g), z6.inverse(GroupElement(g))), z6.identity());
}

TEST(GroupTable, TrivialGroup) {
  const GroupTable z1 = make_cyclic(1);
  EXPECT_EQ(z1.order(), 1);
  EXPECT_EQ(z1.inverse(z1.identity()), z1.identity());
}

TEST(GroupTable, RejectsBadTables) {
  EXPECT_THROW(make_cyclic(0), InvalidInput);
  EXPECT_THROW(GroupTable({}), InvalidInput);
  // Not a Latin square.
  EXPECT_THROW(GroupTable({{0, 1}, {1, 1}}), InvalidInput);
  // Entry out of range.
  EXPECT_THROW(GroupTable({{0, 2}, {1, 0}}), InvalidInput);
  // Ragged.
  EXPECT_THROW(GroupTable({{0, 1}, {1}}), InvalidInput);
  // A Latin square with identity that is not associative (order 5 loop).
  EXPECT_THROW(GroupTable({{0, 1, 2, 3, 4},
                           {1, 0, 3, 4, 2},
                           {2, 4, 0, 1, 3},
                           {3, 2, 4, 0, 1},
                           {4, 3, 1, 2, 0}}),
               InvalidInput);
}

TEST(GroupTable, ForeignElementsRejected) {
  const GroupTable z3 = make_cyclic(3);
  EXPECT_THROW(z3.compose(GroupElement(3), GroupElement(0)), InvalidInput);
  EXPECT_THROW(z3.inverse(GroupElement(-1)), InvalidInput);
  EXPECT_FALSE(z3.contains(GroupElement(7)));
}

TEST(GroupTable, NonAbelianTable) {
  // S3 as permutations of {0,1,2}, multiplied by composition.
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                         {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  const GroupTable s3(table, "S3");
  EXPECT_EQ(s3.order(), 6);
  EXPECT_NE(s3.compose(GroupElement(1), GroupElement(3)),
            s3.compose(GroupElement(3), GroupElement(1)));
  EXPECT_EQ(subgroups(s3).size(), 6u);
}

TEST(GroupTable, DirectProduct) {
  const GroupTable z2z2 = make_direct_product(make_cyclic(2), make_cyclic(2));
  EXPECT_EQ(z2z2.order(), 4);
  for (int g = 0; g < 4; ++g)
    EXPECT_EQ(z2z2.compose(GroupElement(g), GroupElement(g)), z2z2.identity());
  EXPECT_FALSE(z2z2 == make_cyclic(4));
  EXPECT_EQ(subgroups(z2z2).size(), 5u);
}

TEST(Subgroups, CyclicLattice) {
  // Subgroups of Zn correspond to divisors of n.
  EXPECT_EQ(subgroups(make_cyclic(6)).size(), 4u);
  EXPECT_EQ(subgroups(make_cyclic(12)).size(), 6u);
  EXPECT_EQ(subgroups(make_cyclic(7)).size(), 2u);
  const auto subs = subgroups(make_cyclic(6));
  EXPECT_EQ(subs.front(), std::vector<int>({0}));
  EXPECT_EQ(subs.back().size(), 6u);
}

TEST(Subgroups, Guarded) {
  ScaleGuard guard;
  guard.max_group_order = 4;
  EXPECT_THROW(subgroups(make_cyclic(6), guard), GuardExceeded);
}

}  // namespace
}  // namespace rhodes
