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

#include "rhodes/partition.hpp"

#include <algorithm>
#include <string>

#include "rhodes/error.hpp"

namespace rhodes {

PartialPartition::PartialPartition(int ground_size,
                                   std::vector<std::vector<int>> blocks)
    : ground_size_(ground_size), blocks_(std::move(blocks)) {
  if (ground_size < 0) throw InvalidInput("negative ground set size");
  std::vector<char> seen(ground_size, 0);
  for (auto& block : blocks_) {
    if (block.empty()) throw InvalidInput("partial partition has an empty block");
    std::sort(block.begin(), block.end());
    for (int v : block) {
      if (v < 0 || v >= ground_size)
        throw InvalidInput("vertex " + std::to_string(v) +
                           " outside the ground set");
      if (seen[v]) throw InvalidInput("blocks overlap at " + std::to_string(v));
      seen[v] = 1;
    }
  }
  std::sort(blocks_.begin(), blocks_.end());
}

Bitset PartialPartition::support() const {
  Bitset s(ground_size_);
  for (const auto& b : blocks_)
    for (int v : b) s.set(v);
  return s;
}

int PartialPartition::block_of(int v) const {
  for (int i = 0; i < num_blocks(); ++i)
    if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), v)) return i;
  return -1;
}

bool refines(const PartialPartition& tau, const PartialPartition& pi) {
  if (tau.ground_size() != pi.ground_size())
    throw InvalidInput("partial partitions over different ground sets");
  for (const auto& block : tau.blocks()) {
    const int target = pi.block_of(block.front());
    if (target < 0) return false;
    for (int v : block)
      if (pi.block_of(v) != target) return false;
  }
  return true;
}

std::vector<std::vector<std::vector<int>>> set_partitions(
    const std::vector<int>& elements) {
  std::vector<std::vector<std::vector<int>>> out;
  if (elements.empty()) {
    out.emplace_back();
    return out;
  }
  // Restricted growth strings: element i joins an existing block or opens
  // a new one.
  std::vector<std::vector<int>> current;
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == elements.size()) {
      out.push_back(current);
      return;
    }
    for (std::size_t b = 0; b < current.size(); ++b) {
      current[b].push_back(elements[i]);
      self(self, i + 1);
      current[b].pop_back();
    }
    current.push_back({elements[i]});
    self(self, i + 1);
    current.pop_back();
  };
  recurse(recurse, 0);
  for (auto& p : out) std::sort(p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Bitset> vertex_subsets_lex(int n) {
  std::vector<Bitset> out;
  Bitset current(n);
  auto recurse = [&](auto&& self, int start) -> void {
    out.push_back(current);
    for (int v = start; v < n; ++v) {
      current.set(v);
      self(self, v + 1);
      current.reset(v);
    }
  };
  recurse(recurse, 0);
  return out;
}

std::vector<PartialPartition> all_partial_partitions(int n) {
  std::vector<PartialPartition> out;
  for (const auto& support : vertex_subsets_lex(n))
    for (auto& blocks : set_partitions(support.members()))
      out.emplace_back(n, std::move(blocks));
  return out;
}

GroupElement PotentialFunction::at(int v) const {
  const auto& x = values.at(v);
  if (!x) throw InvalidInput("potential undefined at " + std::to_string(v));
  return *x;
}

Bitset PotentialFunction::domain() const {
  Bitset d(values.size());
  for (std::size_t v = 0; v < values.size(); ++v)
    if (values[v]) d.set(v);
  return d;
}

GroupElement PotentialSystem::rep_at(int v) const {
  const auto& x = rep_.at(v);
  if (!x) throw InvalidInput("vertex " + std::to_string(v) +
                             " outside the support of the potential system");
  return *x;
}

bool operator<(const PotentialSystem& a, const PotentialSystem& b) {
  if (a.partition_ != b.partition_) return a.partition_ < b.partition_;
  auto key = [](const std::optional<GroupElement>& x) {
    return x ? x->index : -1;
  };
  return std::lexicographical_compare(
      a.rep_.begin(), a.rep_.end(), b.rep_.begin(), b.rep_.end(),
      [&](const auto& x, const auto& y) { return key(x) < key(y); });
}

PotentialSystem canonicalize(const GroupTable& group, const PartialPartition& pi,
                             const PotentialFunction& theta) {
  if (static_cast<int>(theta.values.size()) != pi.ground_size())
    throw InvalidInput("potential function and partition differ in ground set");
  PotentialSystem out;
  out.partition_ = pi;
  out.rep_.assign(pi.ground_size(), std::nullopt);
  for (const auto& block : pi.blocks()) {
    const GroupElement shift = group.inverse(theta.at(block.front()));
    for (int v : block) out.rep_[v] = group.compose(shift, theta.at(v));
  }
  return out;
}

bool same_class(const GroupTable& group, const PartialPartition& pi,
                const PotentialFunction& theta, const PotentialFunction& eta) {
  return canonicalize(group, pi, theta) == canonicalize(group, pi, eta);
}

PotentialSystem restrict(const GroupTable& group, const PotentialSystem& system,
                         const PartialPartition& tau) {
  if (!refines(tau, system.partition()))
    throw InvalidInput("restriction target does not refine the partition");
  return canonicalize(group, tau, system.as_function());
}

}  // namespace rhodes
