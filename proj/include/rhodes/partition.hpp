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

#ifndef RHODES_PARTITION_HPP_
#define RHODES_PARTITION_HPP_

#include <optional>
#include <vector>

#include "rhodes/algebra.hpp"
#include "rhodes/bitset.hpp"

namespace rhodes {

// A partition of a subset (the support) of the ground set {0..n-1}.
// Blocks are stored sorted, and ordered by their minimum element.
class PartialPartition {
 public:
  PartialPartition() = default;
  explicit PartialPartition(int ground_size) : ground_size_(ground_size) {}
  // Throws InvalidInput on empty, overlapping or out-of-range blocks.
  PartialPartition(int ground_size, std::vector<std::vector<int>> blocks);

  int ground_size() const { return ground_size_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  bool empty() const { return blocks_.empty(); }
  Bitset support() const;
  // Index of the block containing v, or -1.
  int block_of(int v) const;

  friend bool operator==(const PartialPartition&,
                         const PartialPartition&) = default;
  friend bool operator<(const PartialPartition& a, const PartialPartition& b) {
    return a.blocks_ < b.blocks_;
  }

 private:
  int ground_size_ = 0;
  std::vector<std::vector<int>> blocks_;
};

// tau <= pi: every block of tau lies inside a block of pi. Throws
// InvalidInput when the ground sets differ.
bool refines(const PartialPartition& tau, const PartialPartition& pi);

// All partial partitions of {0..n-1}: supports in lexicographic order of
// their sorted member lists, then set partitions in canonical order.
std::vector<PartialPartition> all_partial_partitions(int n);
// All set partitions of `elements` (which must be sorted).
std::vector<std::vector<std::vector<int>>> set_partitions(
    const std::vector<int>& elements);
// Subsets of {0..n-1} ordered lexicographically by sorted member list.
std::vector<Bitset> vertex_subsets_lex(int n);

// A function from (part of) the ground set into a group. Undefined points
// are std::nullopt.
struct PotentialFunction {
  std::vector<std::optional<GroupElement>> values;

  PotentialFunction() = default;
  explicit PotentialFunction(int ground_size) : values(ground_size) {}
  explicit PotentialFunction(std::vector<std::optional<GroupElement>> v)
      : values(std::move(v)) {}
  bool defined(int v) const { return values.at(v).has_value(); }
  GroupElement at(int v) const;
  Bitset domain() const;
  friend bool operator==(const PotentialFunction&,
                         const PotentialFunction&) = default;
};

// A potential system [theta]_pi, stored as the canonical representative:
// within each block the minimum vertex carries the identity.
class PotentialSystem {
 public:
  PotentialSystem() = default;

  const PartialPartition& partition() const { return partition_; }
  const std::vector<std::optional<GroupElement>>& rep() const { return rep_; }
  GroupElement rep_at(int v) const;
  // The representative as a potential function on the support.
  PotentialFunction as_function() const { return PotentialFunction{rep_}; }

  friend bool operator==(const PotentialSystem&,
                         const PotentialSystem&) = default;
  friend bool operator<(const PotentialSystem& a, const PotentialSystem& b);

 private:
  friend PotentialSystem canonicalize(const GroupTable&,
                                      const PartialPartition&,
                                      const PotentialFunction&);
  PartialPartition partition_;
  std::vector<std::optional<GroupElement>> rep_;
};

// Per block, left-multiplies theta by theta(min vertex)^-1. Throws
// InvalidInput when theta is undefined somewhere on the support or the
// ground sets differ.
PotentialSystem canonicalize(const GroupTable& group, const PartialPartition& pi,
                             const PotentialFunction& theta);

// eta ~_pi theta.
bool same_class(const GroupTable& group, const PartialPartition& pi,
                const PotentialFunction& theta, const PotentialFunction& eta);

// [theta]_tau for tau refining the system's partition. Throws InvalidInput
// when tau does not refine it.
PotentialSystem restrict(const GroupTable& group, const PotentialSystem& system,
                         const PartialPartition& tau);

}  // namespace rhodes

#endif  // RHODES_PARTITION_HPP_
