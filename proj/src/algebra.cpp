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

#include "rhodes/algebra.hpp"

#include <algorithm>
#include <set>

#include "rhodes/bitset.hpp"

namespace rhodes {

namespace {

constexpr int kAssociativityCheckBound = 64;

}  // namespace

GroupTable::GroupTable(std::vector<std::vector<int>> table, std::string label)
    : order_(static_cast<int>(table.size())), label_(std::move(label)) {
  if (order_ == 0) throw InvalidInput("group table must be nonempty");
  table_.reserve(static_cast<std::size_t>(order_) * order_);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != order_)
      throw InvalidInput("group table must be square");
    for (int x : row) {
      if (x < 0 || x >= order_)
        throw InvalidInput("group table entry out of range");
      table_.push_back(x);
    }
  }
  auto at = [&](int a, int b) { return table_[a * order_ + b]; };

  identity_ = -1;
  for (int e = 0; e < order_ && identity_ < 0; ++e) {
    bool ok = true;
    for (int g = 0; g < order_ && ok; ++g) ok = at(e, g) == g && at(g, e) == g;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw InvalidInput("group table has no identity");

  inverse_.assign(order_, -1);
  for (int g = 0; g < order_; ++g) {
    for (int h = 0; h < order_; ++h) {
      if (at(g, h) == identity_ && at(h, g) == identity_) {
        inverse_[g] = h;
        break;
      }
    }
    if (inverse_[g] < 0)
      throw InvalidInput("group element " + std::to_string(g) +
                         " has no two-sided inverse");
  }

  if (order_ <= kAssociativityCheckBound) {
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        for (int c = 0; c < order_; ++c)
          if (at(at(a, b), c) != at(a, at(b, c)))
            throw InvalidInput("group table is not associative at (" +
                               std::to_string(a) + "," + std::to_string(b) +
                               "," + std::to_string(c) + ")");
  }
}

void GroupTable::check(GroupElement g) const {
  if (!contains(g))
    throw InvalidInput("element " + std::to_string(g.index) +
                       " does not belong to group " + label_);
}

std::vector<std::vector<int>> GroupTable::table() const {
  std::vector<std::vector<int>> out(order_);
  for (int a = 0; a < order_; ++a)
    out[a].assign(table_.begin() + a * order_, table_.begin() + (a + 1) * order_);
  return out;
}

GroupTable make_cyclic(int n) {
  if (n <= 0) throw InvalidInput("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return GroupTable(std::move(t), "Z" + std::to_string(n));
}

GroupTable make_direct_product(const GroupTable& g, const GroupTable& h) {
  const int ng = g.order(), nh = h.order();
  std::vector<std::vector<int>> t(ng * nh, std::vector<int>(ng * nh));
  for (int a = 0; a < ng * nh; ++a)
    for (int b = 0; b < ng * nh; ++b) {
      const int left =
          g.compose(GroupElement(a / nh), GroupElement(b / nh)).index;
      const int right =
          h.compose(GroupElement(a % nh), GroupElement(b % nh)).index;
      t[a][b] = left * nh + right;
    }
  return GroupTable(std::move(t), g.label() + "x" + h.label());
}

std::vector<std::vector<int>> subgroups(const GroupTable& group,
                                        const ScaleGuard& guard) {
  const auto n = static_cast<std::size_t>(group.order());
  guard.check("max_group_order", guard.max_group_order, n);

  // Subgroup generated by `seed`: close under products (inverses follow in
  // a finite group).
  auto generate = [&](Bitset seed) {
    seed.set(group.identity().index);
    bool grew = true;
    while (grew) {
      grew = false;
      const auto members = seed.members();
      for (int a : members)
        for (int b : members) {
          const int c = group.compose(GroupElement(a), GroupElement(b)).index;
          if (!seed.test(c)) {
            seed.set(c);
            grew = true;
          }
        }
    }
    return seed;
  };

  std::set<Bitset> found;
  std::vector<Bitset> frontier{generate(Bitset(n))};
  found.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Bitset> next;
    for (const auto& h : frontier) {
      for (std::size_t g = 0; g < n; ++g) {
        if (h.test(g)) continue;
        Bitset seed = h;
        seed.set(g);
        Bitset k = generate(std::move(seed));
        if (found.insert(k).second) next.push_back(std::move(k));
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::vector<int>> out;
  for (const auto& h : found) out.push_back(h.members());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace rhodes
