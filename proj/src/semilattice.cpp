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

#include "rhodes/semilattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace rhodes {

namespace {

std::string describe(const Multigraph& graph, const Subgraph& s) {
  std::string out = "V{";
  for (int v : s.vertices.members()) out += std::to_string(graph.vertex_id(v)) + ",";
  if (out.back() == ',') out.pop_back();
  out += "} E{";
  for (int e : s.edges.members()) out += std::to_string(graph.edge(e).id) + ",";
  if (out.back() == ',') out.pop_back();
  return out + "}";
}

std::string describe(const Multigraph& graph, const PartitionPotentialPair& p) {
  std::string out = "(";
  for (const auto& block : p.partition().blocks()) {
    out += "{";
    for (int v : block)
      out += std::to_string(graph.vertex_id(v)) + ":" +
             std::to_string(p.system.rep_at(v).index) + ",";
    out.back() = '}';
  }
  return out + ")";
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

PartitionPotentialPair make_pp_pair(const GroupTable& group,
                                    const PartialPartition& pi,
                                    const PotentialFunction& theta) {
  return {canonicalize(group, pi, theta)};
}

Subgraph b_map(const GainGraph& phi, const PartitionPotentialPair& p) {
  const auto& graph = phi.graph();
  const auto& group = phi.group();
  const auto& pi = p.partition();
  if (pi.ground_size() != graph.num_vertices())
    throw InvalidInput("pair is not over this gain graph's vertex set");
  Subgraph out{pi.support(), graph.no_edges()};
  for (int e = 0; e < graph.num_edges(); ++e) {
    const Edge& edge = graph.edge(e);
    const int block = pi.block_of(edge.tail);
    if (block < 0 || pi.block_of(edge.head) != block) continue;
    const GroupElement expected = group.compose(
        group.inverse(p.system.rep_at(edge.tail)), p.system.rep_at(edge.head));
    if (phi.gain(e) == expected) out.edges.set(e);
  }
  return out;
}

bool is_phi_connected(const GainGraph& phi, const PartitionPotentialPair& p) {
  return components(phi.graph(), b_map(phi, p)) == p.partition();
}

bool pair_leq(const GroupTable& group, const PartitionPotentialPair& lower,
              const PartitionPotentialPair& upper) {
  if (!refines(lower.partition(), upper.partition())) return false;
  return restrict(group, upper.system, lower.partition()) == lower.system;
}

bool is_closed_balanced(const BiasedGraph& omega, const Subgraph& sub) {
  if (!is_balanced(omega, sub)) return false;
  return complete_balanced_circles(omega, sub) == sub;
}

bool is_closed_balanced(const GainGraph& phi, const Subgraph& sub,
                        const ScaleGuard& guard) {
  return is_closed_balanced(from_gains(phi, guard), sub);
}

Subgraph closed_balanced_closure(const BiasedGraph& omega, const Subgraph& sub) {
  if (!is_balanced(omega, sub))
    throw PreconditionError("closed balanced closure needs a balanced subgraph");
  Subgraph out = complete_balanced_circles(omega, sub);
  if (!is_balanced(omega, out))
    throw std::logic_error("balanced-circle completion produced an unbalanced subgraph");
  return out;
}

PartitionPotentialPair pair_of(const GainGraph& phi, const Subgraph& closed,
                               const ScaleGuard& /*guard*/) {
  const auto& graph = phi.graph();
  const auto& group = phi.group();
  validate_subgraph(graph, closed);
  if (!is_balanced_subgraph(phi, closed))
    throw PreconditionError("pair_of needs a balanced subgraph");
  const PartialPartition pi = components(graph, closed);
  const PotentialFunction theta = potential(phi, closed);
  // Closedness: every edge joining two vertices of one component whose gain
  // agrees with the potential closes a balanced circle through the rest of
  // that component, so it must already be present.
  for (int e = 0; e < graph.num_edges(); ++e) {
    if (closed.edges.test(e)) continue;
    const Edge& edge = graph.edge(e);
    const int block = pi.block_of(edge.tail);
    if (block < 0 || pi.block_of(edge.head) != block) continue;
    if (phi.gain(e) ==
        group.compose(group.inverse(theta.at(edge.tail)), theta.at(edge.head)))
      throw PreconditionError("pair_of needs a closed subgraph; edge " +
                              std::to_string(edge.id) + " is forced");
  }
  return make_pp_pair(group, pi, theta);
}

PartitionPotentialPair meet_pairs(const GainGraph& phi,
                                  const PartitionPotentialPair& p,
                                  const PartitionPotentialPair& q,
                                  bool* refined) {
  const auto& group = phi.group();
  const auto& pi = p.partition();
  const auto& tau = q.partition();
  const int n = phi.graph().num_vertices();
  if (pi.ground_size() != n || tau.ground_size() != n)
    throw InvalidInput("pairs are not over this gain graph's vertex set");

  const auto common = (pi.support() & tau.support()).members();
  UnionFind uf(n);
  for (std::size_t i = 0; i < common.size(); ++i) {
    const int x = common[i];
    for (std::size_t j = i + 1; j < common.size(); ++j) {
      const int y = common[j];
      if (pi.block_of(x) != pi.block_of(y) || tau.block_of(x) != tau.block_of(y))
        continue;
      const auto dtheta = group.compose(group.inverse(p.system.rep_at(x)),
                                        p.system.rep_at(y));
      const auto deta = group.compose(group.inverse(q.system.rep_at(x)),
                                      q.system.rep_at(y));
      if (dtheta == deta) uf.unite(x, y);
    }
  }
  std::unordered_map<int, std::vector<int>> groups;
  for (int x : common) groups[uf.find(x)].push_back(x);
  std::vector<std::vector<int>> blocks;
  for (auto& [root, members] : groups) blocks.push_back(std::move(members));
  const PartialPartition rho(n, std::move(blocks));

  PotentialFunction theta = p.system.as_function();
  PartitionPotentialPair candidate = make_pp_pair(group, rho, theta);
  const PartialPartition connected =
      components(phi.graph(), b_map(phi, candidate));
  if (refined) *refined = connected != rho;
  if (connected == rho) return candidate;
  return make_pp_pair(group, connected, theta);
}

RhodesSemilatticeGraphic enumerate_graphic(const BiasedGraph& omega,
                                           const ScaleGuard& guard) {
  const auto& graph = omega.graph();
  guard.check("max_vertices", guard.max_vertices, graph.num_vertices());
  RhodesSemilatticeGraphic out;
  for (const Bitset& x : vertex_subsets_lex(graph.num_vertices())) {
    const Bitset within = graph.edges_within(x);
    std::set<Bitset> seen;
    std::vector<Bitset> queue;
    const Subgraph start = closed_balanced_closure(omega, {x, graph.no_edges()});
    seen.insert(start.edges);
    queue.push_back(start.edges);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Bitset current = queue[head];
      (within - current).for_each([&](std::size_t e) {
        Subgraph grown{x, current};
        grown.edges.set(e);
        if (!is_balanced(omega, grown)) return;
        Subgraph closed = closed_balanced_closure(omega, grown);
        if (seen.insert(closed.edges).second) {
          queue.push_back(closed.edges);
          guard.check("max_elements", guard.max_elements,
                      out.elements.size() + seen.size());
        }
      });
    }
    for (const auto& edges : seen) out.elements.push_back({x, edges});
  }
  return out;
}

RhodesSemilatticeGraphic enumerate_graphic(const GainGraph& phi,
                                           const ScaleGuard& guard) {
  return enumerate_graphic(from_gains(phi, guard), guard);
}

RhodesSemilatticePP enumerate_pp(const GainGraph& phi, const ScaleGuard& guard) {
  const auto& graph = phi.graph();
  const auto& group = phi.group();
  const int n = graph.num_vertices();
  guard.check("max_vertices", guard.max_vertices, n);
  RhodesSemilatticePP out;
  for (const auto& pi : all_partial_partitions(n)) {
    // Free coordinates: every non-minimum vertex of every block.
    std::vector<int> free;
    for (const auto& block : pi.blocks())
      free.insert(free.end(), block.begin() + 1, block.end());
    PotentialFunction theta(n);
    for (const auto& block : pi.blocks()) theta.values[block.front()] = group.identity();
    std::vector<int> digits(free.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < free.size(); ++i)
        theta.values[free[i]] = GroupElement(digits[i]);
      PartitionPotentialPair p = make_pp_pair(group, pi, theta);
      if (is_phi_connected(phi, p)) {
        out.elements.push_back(std::move(p));
        guard.check("max_elements", guard.max_elements, out.elements.size());
      }
      // Odometer over |G|^free; rightmost digit fastest.
      std::size_t i = free.size();
      while (i > 0 && ++digits[i - 1] == group.order()) digits[--i] = 0;
      if (i == 0) break;
    }
  }
  return out;
}

IsomorphismReport verify_isomorphism(const GainGraph& phi,
                                     const ScaleGuard& guard) {
  const auto& graph = phi.graph();
  IsomorphismReport report;
  const BiasedGraph omega = from_gains(phi, guard);
  const auto pp = enumerate_pp(phi, guard).elements;
  const auto graphic = enumerate_graphic(omega, guard).elements;
  report.pp_count = pp.size();
  report.graphic_count = graphic.size();

  std::vector<Subgraph> images;
  images.reserve(pp.size());
  std::unordered_map<Subgraph, std::size_t, SubgraphHash> preimage;
  for (std::size_t i = 0; i < pp.size(); ++i) {
    Subgraph image = b_map(phi, pp[i]);
    if (!is_closed_balanced(omega, image)) {
      report.counterexample = "image of " + describe(graph, pp[i]) +
                              " is not closed and balanced: " +
                              describe(graph, image);
      return report;
    }
    auto [it, fresh] = preimage.emplace(image, i);
    if (!fresh) {
      report.counterexample = "b_map not injective: " +
                              describe(graph, pp[it->second]) + " and " +
                              describe(graph, pp[i]) + " both map to " +
                              describe(graph, image);
      return report;
    }
    images.push_back(std::move(image));
  }
  for (const auto& b : graphic) {
    if (!preimage.count(b)) {
      report.counterexample =
          "closed balanced subgraph without preimage: " + describe(graph, b);
      return report;
    }
  }
  if (pp.size() != graphic.size()) {
    report.counterexample = "element counts differ";
    return report;
  }
  for (std::size_t i = 0; i < pp.size(); ++i)
    for (std::size_t j = 0; j < pp.size(); ++j) {
      ++report.pairs_checked;
      const bool by_pairs = pair_leq(phi.group(), pp[i], pp[j]);
      const bool by_graphs = images[i].is_subgraph_of(images[j]);
      if (by_pairs != by_graphs) {
        report.counterexample = "order mismatch: " + describe(graph, pp[i]) +
                                (by_pairs ? " <= " : " !<= ") +
                                describe(graph, pp[j]) + " but images " +
                                describe(graph, images[i]) +
                                (by_graphs ? " ⊆ " : " ⊄ ") +
                                describe(graph, images[j]);
        return report;
      }
    }
  report.ok = true;
  return report;
}

}  // namespace rhodes
