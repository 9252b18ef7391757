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

#ifndef RHODES_BIAS_HPP_
#define RHODES_BIAS_HPP_

#include <optional>
#include <unordered_set>
#include <vector>

#include "rhodes/gain.hpp"
#include "rhodes/multigraph.hpp"

namespace rhodes {

// A multigraph with an explicit set of balanced circles. The set is stored
// extensionally; some biased graphs have no gain realization.
class BiasedGraph {
 public:
  // Throws InvalidInput if a circle is not a circle of `graph` or some theta
  // subgraph contains exactly two balanced circles.
  BiasedGraph(Multigraph graph, std::vector<Circle> balanced,
              const ScaleGuard& guard = {});

  const Multigraph& graph() const { return graph_; }
  const std::vector<Circle>& balanced() const { return balanced_; }

  bool is_balanced_circle(const Bitset& circle_edges) const {
    return keys_.count(circle_edges) != 0;
  }
  bool is_balanced_circle(const Circle& c) const {
    return is_balanced_circle(c.edge_set(graph_.num_edges()));
  }

  // Balanced circles as (vertex set, edge set) pairs, in canonical order.
  const std::vector<Subgraph>& balanced_sets() const { return sets_; }

 private:
  Multigraph graph_;
  std::vector<Circle> balanced_;
  std::vector<Subgraph> sets_;
  std::unordered_set<Bitset, BitsetHash> keys_;
};

// <Phi> = (Γ, B(Phi)).
BiasedGraph from_gains(const GainGraph& phi, const ScaleGuard& guard = {});

// True iff every theta subgraph has 0, 1 or 3 balanced circles.
bool validate_theta(const Multigraph& graph, const std::vector<Circle>& balanced,
                    const ScaleGuard& guard = {});
// The first offending theta, if any.
std::optional<Theta> find_theta_violation(const Multigraph& graph,
                                          const std::vector<Circle>& balanced,
                                          const ScaleGuard& guard = {});

// Every circle of the subgraph is balanced. Uses the fundamental circles of
// a spanning forest, which suffices by the theta property.
bool is_balanced(const BiasedGraph& omega, const Subgraph& sub);

// Balance of each component of `sub`, indexed like spanning_forest().
struct ComponentBalance {
  std::vector<int> component_of;
  std::vector<char> balanced;  // per component
};
ComponentBalance component_balance(const BiasedGraph& omega, const Subgraph& sub);

// Repeatedly adds the missing edge of any balanced circle C with C \ e
// inside `sub` (so V(C) ⊆ V(sub)). The vertex set never changes.
Subgraph complete_balanced_circles(const BiasedGraph& omega, Subgraph sub);

}  // namespace rhodes

#endif  // RHODES_BIAS_HPP_
