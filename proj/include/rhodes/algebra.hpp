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

#ifndef RHODES_ALGEBRA_HPP_
#define RHODES_ALGEBRA_HPP_

#include <compare>
#include <string>
#include <vector>

#include "rhodes/error.hpp"

namespace rhodes {

// An element of a finite group, identified by its row in the owning table.
struct GroupElement {
  int index = 0;

  constexpr GroupElement() = default;
  constexpr explicit GroupElement(int i) : index(i) {}
  friend constexpr auto operator<=>(const GroupElement&,
                                    const GroupElement&) = default;
};

// A finite group given by an explicit multiplication table. Immutable after
// construction.
class GroupTable {
 public:
  // Validates closure, identity, inverses and (for order <= 64)
  // associativity. Throws InvalidInput on failure.
  explicit GroupTable(std::vector<std::vector<int>> table,
                      std::string label = "table");

  int order() const { return order_; }
  GroupElement identity() const { return GroupElement(identity_); }
  const std::string& label() const { return label_; }

  GroupElement compose(GroupElement g, GroupElement h) const {
    check(g);
    check(h);
    return GroupElement(table_[g.index * order_ + h.index]);
  }
  GroupElement inverse(GroupElement g) const {
    check(g);
    return GroupElement(inverse_[g.index]);
  }
  bool contains(GroupElement g) const {
    return g.index >= 0 && g.index < order_;
  }
  void check(GroupElement g) const;

  std::vector<std::vector<int>> table() const;

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;  // row-major order x order
  std::vector<int> inverse_;
  std::string label_;
};

// Additive cyclic group Z_n; element i is the residue i.
GroupTable make_cyclic(int n);

// G x H with (g, h) stored at index g * |H| + h.
GroupTable make_direct_product(const GroupTable& g, const GroupTable& h);

inline GroupElement compose(const GroupTable& group, GroupElement g,
                            GroupElement h) {
  return group.compose(g, h);
}

// Every subgroup as a sorted list of element indices; subgroups are listed
// by size, then lexicographically. Exhaustive, so the order is bounded.
std::vector<std::vector<int>> subgroups(const GroupTable& group,
                                        const ScaleGuard& guard = {});

}  // namespace rhodes

#endif  // RHODES_ALGEBRA_HPP_
