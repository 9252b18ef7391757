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

#include "rhodes/matroid.hpp"

#include <algorithm>
#include <unordered_set>

namespace rhodes {

std::string to_string(MatroidKind kind) {
  return kind == MatroidKind::kFrame ? "frame" : "lift";
}

MatroidKind matroid_kind_from_string(const std::string& name) {
  if (name == "frame") return MatroidKind::kFrame;
  if (name == "lift") return MatroidKind::kLift;
  throw InvalidInput("unknown matroid '" + name + "' (expected frame or lift)");
}

namespace {

Subgraph checked_spanning(const BiasedGraph& omega, const Bitset& ground,
                          const Bitset& edges) {
  const auto& graph = omega.graph();
  if (static_cast<int>(ground.size()) != graph.num_vertices() ||
      static_cast<int>(edges.size()) != graph.num_edges())
    throw InvalidInput("edge or vertex set does not belong to this host");
  if (!edges.is_subset_of(graph.edges_within(ground)))
    throw InvalidInput("edge set leaves the induced subgraph on the ground set");
  return {ground, edges};
}

}  // namespace

int frame_rank(const BiasedGraph& omega, const Bitset& ground,
               const Bitset& edges) {
  const auto cb = component_balance(omega, checked_spanning(omega, ground, edges));
  const int balanced_components = static_cast<int>(
      std::count(cb.balanced.begin(), cb.balanced.end(), char{1}));
  return static_cast<int>(ground.count()) - balanced_components;
}

int lift_rank(const BiasedGraph& omega, const Bitset& ground,
              const Bitset& edges) {
  const auto cb = component_balance(omega, checked_spanning(omega, ground, edges));
  const bool unbalanced =
      std::find(cb.balanced.begin(), cb.balanced.end(), char{0}) !=
      cb.balanced.end();
  return static_cast<int>(ground.count()) -
         static_cast<int>(cb.balanced.size()) + (unbalanced ? 1 : 0);
}

int rank(MatroidKind kind, const BiasedGraph& omega, const Bitset& ground,
         const Bitset& edges) {
  return kind == MatroidKind::kFrame ? frame_rank(omega, ground, edges)
                                     : lift_rank(omega, ground, edges);
}

Bitset closure(MatroidKind kind, const BiasedGraph& omega, const Bitset& ground,
               const Bitset& edges) {
  const int r = rank(kind, omega, ground, edges);
  Bitset out = edges;
  (omega.graph().edges_within(ground) - edges).for_each([&](std::size_t e) {
    Bitset grown = edges;
    grown.set(e);
    if (rank(kind, omega, ground, grown) == r) out.set(e);
  });
  return out;
}

bool is_flat(MatroidKind kind, const BiasedGraph& omega, const Bitset& ground,
             const Bitset& edges) {
  return closure(kind, omega, ground, edges) == edges;
}

std::vector<Bitset> flats(MatroidKind kind, const BiasedGraph& omega,
                          const Bitset& ground, const ScaleGuard& guard) {
  const auto& graph = omega.graph();
  const Bitset within = graph.edges_within(ground);
  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<Bitset> queue{closure(kind, omega, ground, graph.no_edges())};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Bitset current = queue[head];
    (within - current).for_each([&](std::size_t e) {
      Bitset grown = current;
      grown.set(e);
      Bitset closed = closure(kind, omega, ground, grown);
      if (seen.insert(closed).second) {
        guard.check("max_elements", guard.max_elements, seen.size());
        queue.push_back(std::move(closed));
      }
    });
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

SubgraphLattice matroid_rhodes_lattice(MatroidKind kind, const BiasedGraph& omega,
                                       const ScaleGuard& guard) {
  const auto& graph = omega.graph();
  guard.check("max_vertices", guard.max_vertices, graph.num_vertices());
  std::vector<Subgraph> elements;
  for (const Bitset& x : vertex_subsets_lex(graph.num_vertices()))
    for (auto& f : flats(kind, omega, x, guard)) {
      elements.push_back({x, std::move(f)});
      guard.check("max_elements", guard.max_elements, elements.size());
    }
  return make_subgraph_lattice(std::move(elements), false);
}

SubgraphLattice frame_rhodes_lattice(const BiasedGraph& omega,
                                     const ScaleGuard& guard) {
  return matroid_rhodes_lattice(MatroidKind::kFrame, omega, guard);
}

SubgraphLattice lift_rhodes_lattice(const BiasedGraph& omega,
                                    const ScaleGuard& guard) {
  return matroid_rhodes_lattice(MatroidKind::kLift, omega, guard);
}

}  // namespace rhodes
