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

#ifndef RHODES_MATROID_HPP_
#define RHODES_MATROID_HPP_

#include <string>
#include <vector>

#include "rhodes/bias.hpp"
#include "rhodes/bitset.hpp"
#include "rhodes/poset.hpp"

namespace rhodes {

enum class MatroidKind { kFrame, kLift };

std::string to_string(MatroidKind kind);
MatroidKind matroid_kind_from_string(const std::string& name);

// Edge sets S are measured inside the induced subgraph Ω:ground, viewed as
// the spanning subgraph (ground, S). Every function throws InvalidInput when
// S has an edge outside E(Ω:ground).

// n - b(S); isolated vertices are balanced components.
int frame_rank(const BiasedGraph& omega, const Bitset& ground, const Bitset& edges);

// n - c(S) + delta(S), delta = 0 exactly when (ground, S) is balanced.
int lift_rank(const BiasedGraph& omega, const Bitset& ground, const Bitset& edges);

int rank(MatroidKind kind, const BiasedGraph& omega, const Bitset& ground,
         const Bitset& edges);

// S together with every e in Ω:ground whose addition keeps the rank.
Bitset closure(MatroidKind kind, const BiasedGraph& omega, const Bitset& ground,
               const Bitset& edges);

bool is_flat(MatroidKind kind, const BiasedGraph& omega, const Bitset& ground,
             const Bitset& edges);

// Every flat of the matroid on Ω:ground, found by closing one-element
// extensions of known flats starting from closure(∅). Sorted.
std::vector<Bitset> flats(MatroidKind kind, const BiasedGraph& omega,
                          const Bitset& ground, const ScaleGuard& guard = {});

// (X, F) for every vertex subset X (lexicographic) and every flat F of
// Ω:X, ordered by subgraph containment.
SubgraphLattice frame_rhodes_lattice(const BiasedGraph& omega,
                                     const ScaleGuard& guard = {});
SubgraphLattice lift_rhodes_lattice(const BiasedGraph& omega,
                                    const ScaleGuard& guard = {});
SubgraphLattice matroid_rhodes_lattice(MatroidKind kind, const BiasedGraph& omega,
                                       const ScaleGuard& guard = {});

}  // namespace rhodes

#endif  // RHODES_MATROID_HPP_
