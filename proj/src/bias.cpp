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

#include "rhodes/bias.hpp"

#include <algorithm>

namespace rhodes {

BiasedGraph::BiasedGraph(Multigraph graph, std::vector<Circle> balanced,
                         const ScaleGuard& guard)
    : graph_(std::move(graph)), balanced_(std::move(balanced)) {
  for (const auto& c : balanced_)
    if (!is_valid_circle(graph_, c))
      throw InvalidInput("balanced circle is not a circle of the graph");
  std::sort(balanced_.begin(), balanced_.end());
  balanced_.erase(std::unique(balanced_.begin(), balanced_.end()),
                  balanced_.end());
  for (const auto& c : balanced_) {
    sets_.push_back({c.vertex_set(graph_.num_vertices()),
                     c.edge_set(graph_.num_edges())});
    keys_.insert(sets_.back().edges);
  }
  if (auto bad = find_theta_violation(graph_, balanced_, guard)) {
    std::string msg = "theta condition violated: theta on edges {";
    for (int e : bad->edges.members())
      msg += std::to_string(graph_.edge(e).id) + ",";
    msg.back() = '}';
    msg += " has exactly two balanced circles";
    throw InvalidInput(msg);
  }
}

BiasedGraph from_gains(const GainGraph& phi, const ScaleGuard& guard) {
  return BiasedGraph(phi.graph(), balanced_circles(phi, guard), guard);
}

std::optional<Theta> find_theta_violation(const Multigraph& graph,
                                          const std::vector<Circle>& balanced,
                                          const ScaleGuard& guard) {
  std::unordered_set<Bitset, BitsetHash> keys;
  for (const auto& c : balanced) keys.insert(c.edge_set(graph.num_edges()));
  std::optional<Theta> bad;
  if (keys.empty()) return bad;
  for_each_theta(
      graph,
      [&](const Theta& t) {
        if (bad) return;
        int count = 0;
        for (const auto& c : t.circles)
          count += keys.count(c.edge_set(graph.num_edges())) ? 1 : 0;
        if (count == 2) bad = t;
      },
      guard);
  return bad;
}

bool validate_theta(const Multigraph& graph, const std::vector<Circle>& balanced,
                    const ScaleGuard& guard) {
  return !find_theta_violation(graph, balanced, guard).has_value();
}

ComponentBalance component_balance(const BiasedGraph& omega, const Subgraph& sub) {
  validate_subgraph(omega.graph(), sub);
  const auto forest = spanning_forest(omega.graph(), sub);
  ComponentBalance out{forest.component_of,
                       std::vector<char>(forest.num_components, 1)};
  for (const auto& [comp, circle] : forest.fundamental)
    if (out.balanced[comp] && !omega.is_balanced_circle(circle))
      out.balanced[comp] = 0;
  return out;
}

bool is_balanced(const BiasedGraph& omega, const Subgraph& sub) {
  validate_subgraph(omega.graph(), sub);
  const auto forest = spanning_forest(omega.graph(), sub);
  return std::all_of(forest.fundamental.begin(), forest.fundamental.end(),
                     [&](const auto& fc) {
                       return omega.is_balanced_circle(fc.second);
                     });
}

Subgraph complete_balanced_circles(const BiasedGraph& omega, Subgraph sub) {
  validate_subgraph(omega.graph(), sub);
  std::vector<const Subgraph*> candidates;
  for (const auto& c : omega.balanced_sets())
    if (c.vertices.is_subset_of(sub.vertices)) candidates.push_back(&c);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Subgraph* c : candidates) {
      if (c->edges.count_minus(sub.edges) == 1) {
        sub.edges |= c->edges;
        grew = true;
      }
    }
  }
  return sub;
}

}  // namespace rhodes
