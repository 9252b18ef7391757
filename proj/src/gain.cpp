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

#include "rhodes/gain.hpp"

#include <deque>
#include <optional>

namespace rhodes {

GainGraph::GainGraph(Multigraph graph, GroupTable group,
                     std::vector<GroupElement> gains)
    : graph_(std::move(graph)), group_(std::move(group)), gains_(std::move(gains)) {
  if (static_cast<int>(gains_.size()) != graph_.num_edges())
    throw InvalidInput("every edge needs exactly one gain");
  for (auto g : gains_) group_.check(g);
}

GroupElement GainGraph::gain_from(int edge, int from) const {
  const Edge& e = graph_.edge(edge);
  if (from == e.tail) return gains_[edge];
  if (from == e.head) return group_.inverse(gains_[edge]);
  throw InvalidInput("vertex is not an endpoint of edge " + std::to_string(e.id));
}

GainGraph group_expansion(const Multigraph& base, const GroupTable& group) {
  if (base.has_loops())
    throw InvalidInput("group expansion requires a loop-free base graph");
  std::vector<EdgeSpec> edges;
  std::vector<GroupElement> gains;
  const int order = group.order();
  for (int e = 0; e < base.num_edges(); ++e) {
    const Edge& be = base.edge(e);
    for (int g = 0; g < order; ++g) {
      edges.push_back({e * order + g, base.vertex_id(be.tail),
                       base.vertex_id(be.head)});
      gains.emplace_back(g);
    }
  }
  return GainGraph(Multigraph(base.vertex_ids(), edges), group, std::move(gains));
}

GroupElement path_gain(const GainGraph& phi, const Walk& walk) {
  const auto& group = phi.group();
  if (walk.vertices.size() != walk.edges.size() + 1)
    throw InvalidInput("walk needs one more vertex than edges");
  GroupElement acc = group.identity();
  for (std::size_t i = 0; i < walk.edges.size(); ++i) {
    const int e = walk.edges[i];
    if (e < 0 || e >= phi.graph().num_edges())
      throw InvalidInput("walk edge out of range");
    const Edge& edge = phi.graph().edge(e);
    const int from = walk.vertices[i], to = walk.vertices[i + 1];
    const bool forward = edge.tail == from && edge.head == to;
    const bool backward = edge.head == from && edge.tail == to;
    if (!forward && !backward)
      throw InvalidInput("walk has a broken incidence at edge " +
                         std::to_string(edge.id));
    acc = group.compose(acc, forward ? phi.gain(e) : group.inverse(phi.gain(e)));
  }
  return acc;
}

bool is_balanced_circle(const GainGraph& phi, const Circle& circle) {
  if (!is_valid_circle(phi.graph(), circle))
    throw InvalidInput("not a circle of this gain graph");
  Walk walk{circle.vertices, circle.edges};
  walk.vertices.push_back(circle.vertices.front());
  return path_gain(phi, walk) == phi.group().identity();
}

namespace {

// BFS potential; nullopt when some edge contradicts it.
std::optional<PotentialFunction> try_potential(const GainGraph& phi,
                                               const Subgraph& sub) {
  const auto& graph = phi.graph();
  const auto& group = phi.group();
  validate_subgraph(graph, sub);
  PotentialFunction theta(graph.num_vertices());
  bool ok = true;
  sub.vertices.for_each([&](std::size_t root) {
    if (!ok || theta.defined(static_cast<int>(root))) return;
    theta.values[root] = group.identity();
    std::deque<int> queue{static_cast<int>(root)};
    while (!queue.empty() && ok) {
      const int v = queue.front();
      queue.pop_front();
      for (int e : graph.incident(v)) {
        if (!sub.edges.test(e)) continue;
        const int w = graph.edge(e).other(v);
        // theta(w) = theta(v) phi(e; v, w)
        const GroupElement expected =
            group.compose(theta.at(v), phi.gain_from(e, v));
        if (!theta.defined(w)) {
          theta.values[w] = expected;
          queue.push_back(w);
        } else if (theta.at(w) != expected) {
          ok = false;
          break;
        }
      }
    }
  });
  if (!ok) return std::nullopt;
  return theta;
}

}  // namespace

bool is_balanced_subgraph(const GainGraph& phi, const Subgraph& sub) {
  return try_potential(phi, sub).has_value();
}

PotentialFunction potential(const GainGraph& phi, const Subgraph& sub) {
  auto theta = try_potential(phi, sub);
  if (!theta) throw PreconditionError("subgraph is unbalanced; no potential exists");
  return *theta;
}

GainGraph switching(const GainGraph& phi, const PotentialFunction& zeta) {
  const auto& graph = phi.graph();
  const auto& group = phi.group();
  if (static_cast<int>(zeta.values.size()) != graph.num_vertices())
    throw InvalidInput("switching function has the wrong ground set");
  for (int v = 0; v < graph.num_vertices(); ++v)
    if (!zeta.defined(v))
      throw InvalidInput("switching function undefined at vertex " +
                         std::to_string(graph.vertex_id(v)));
  std::vector<GroupElement> gains;
  gains.reserve(graph.num_edges());
  for (int e = 0; e < graph.num_edges(); ++e) {
    const Edge& edge = graph.edge(e);
    gains.push_back(group.compose(
        group.compose(group.inverse(zeta.at(edge.tail)), phi.gain(e)),
        zeta.at(edge.head)));
  }
  return GainGraph(graph, group, std::move(gains));
}

std::vector<Circle> balanced_circles(const GainGraph& phi,
                                     const ScaleGuard& guard) {
  std::vector<Circle> out;
  for (auto& c : circles(phi.graph(), guard))
    if (is_balanced_circle(phi, c)) out.push_back(std::move(c));
  return out;
}

}  // namespace rhodes
