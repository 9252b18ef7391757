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

#ifndef RHODES_GAIN_HPP_
#define RHODES_GAIN_HPP_

#include <vector>

#include "rhodes/algebra.hpp"
#include "rhodes/multigraph.hpp"
#include "rhodes/partition.hpp"

namespace rhodes {

// A multigraph whose edges carry group elements. The stored gain of an edge
// is measured along its canonical orientation tail -> head; the reverse gain
// is the inverse and is never stored.
class GainGraph {
 public:
  GainGraph(Multigraph graph, GroupTable group, std::vector<GroupElement> gains);

  const Multigraph& graph() const { return graph_; }
  const GroupTable& group() const { return group_; }
  const std::vector<GroupElement>& gains() const { return gains_; }

  GroupElement gain(int edge) const { return gains_.at(edge); }
  // phi(e; from, other end). For a loop this is the stored gain.
  GroupElement gain_from(int edge, int from) const;

  friend bool operator==(const GainGraph&, const GainGraph&) = default;

 private:
  Multigraph graph_;
  GroupTable group_;
  std::vector<GroupElement> gains_;
};

// G·Γ: one copy (g, e) of each base edge per group element, with id
// base_index * |G| + g, the base orientation and gain g. Throws InvalidInput
// when the base graph has loops.
GainGraph group_expansion(const Multigraph& base, const GroupTable& group);

// A walk v0 e1 v1 ... ek vk. An empty edge list is the trivial walk at v0.
struct Walk {
  std::vector<int> vertices;
  std::vector<int> edges;
};

// Ordered product of oriented gains along the walk. Throws InvalidInput
// on a broken incidence.
GroupElement path_gain(const GainGraph& phi, const Walk& walk);

bool is_balanced_circle(const GainGraph& phi, const Circle& circle);

// Spanning-forest potential check; no circle enumeration.
bool is_balanced_subgraph(const GainGraph& phi, const Subgraph& sub);

// A potential theta on V(sub) with phi(e; v, w) = theta(v)^-1 theta(w) for
// every edge of sub; each component's minimum vertex gets the identity.
// Throws PreconditionError when sub is unbalanced.
PotentialFunction potential(const GainGraph& phi, const Subgraph& sub);

// gain'(e; v, w) = zeta(v)^-1 phi(e; v, w) zeta(w). Throws InvalidInput when
// zeta is not total.
GainGraph switching(const GainGraph& phi, const PotentialFunction& zeta);

std::vector<Circle> balanced_circles(const GainGraph& phi,
                                     const ScaleGuard& guard = {});

}  // namespace rhodes

#endif  // RHODES_GAIN_HPP_
