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

#ifndef RHODES_MULTIGRAPH_HPP_
#define RHODES_MULTIGRAPH_HPP_

#include <array>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rhodes/bitset.hpp"
#include "rhodes/error.hpp"
#include "rhodes/partition.hpp"

namespace rhodes {

// Edge as given by the user: external ids throughout.
struct EdgeSpec {
  int id;
  int tail;
  int head;
};

// Edge with endpoints as dense vertex indices. `tail -> head` is the
// canonical orientation; tail == head is a loop.
struct Edge {
  int id;
  int tail;
  int head;

  bool is_loop() const { return tail == head; }
  // Endpoint opposite to `v` (v itself for loops).
  int other(int v) const { return v == tail ? head : tail; }
};

// A finite graph with loops and parallel edges. Vertices and edges carry
// external integer ids; all set-valued operations use dense indices in
// [0, num_vertices()) and [0, num_edges()), assigned in increasing id order
// for vertices and in input order for edges.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(std::vector<int> vertex_ids, const std::vector<EdgeSpec>& edges);

  int num_vertices() const { return static_cast<int>(vertex_ids_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  int vertex_id(int index) const { return vertex_ids_.at(index); }
  int vertex_index(int id) const;  // throws InvalidInput on unknown id
  const std::vector<int>& vertex_ids() const { return vertex_ids_; }

  const Edge& edge(int index) const { return edges_.at(index); }
  int edge_index(int id) const;  // throws InvalidInput on unknown id
  const std::vector<Edge>& edges() const { return edges_; }

  // Edge indices incident to vertex index v, each loop listed once.
  const std::vector<int>& incident(int v) const { return incident_.at(v); }

  Bitset all_vertices() const { return Bitset::full(vertex_ids_.size()); }
  Bitset all_edges() const { return Bitset::full(edges_.size()); }
  Bitset no_vertices() const { return Bitset(vertex_ids_.size()); }
  Bitset no_edges() const { return Bitset(edges_.size()); }

  // E:I, the edges with both endpoints in `vertices`.
  Bitset edges_within(const Bitset& vertices) const;
  // Endpoints of the given edges.
  Bitset endpoints(const Bitset& edges) const;

  bool has_loops() const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.vertex_ids_ == b.vertex_ids_ && a.edge_specs() == b.edge_specs();
  }
  std::vector<std::array<int, 3>> edge_specs() const;

 private:
  std::vector<int> vertex_ids_;
  std::unordered_map<int, int> vertex_index_;
  std::vector<Edge> edges_;
  std::unordered_map<int, int> edge_index_;
  std::vector<std::vector<int>> incident_;
};

// Complete graph on vertices 0..n-1, edges (i,j) for i<j in lexicographic
// order, oriented i -> j.
Multigraph complete_graph(int n);
// Circle on 0..n-1 with edges i -> i+1 (mod n). n >= 3.
Multigraph cycle_graph(int n);
// Path with n edges on vertices 0..n.
Multigraph path_graph(int n);
// "K4", "C4", "P2" style shorthands.
Multigraph base_graph_from_shorthand(const std::string& name);

// A subgraph of a host multigraph. Isolated vertices are significant: two
// subgraphs with equal edge sets but different vertex sets are distinct.
struct Subgraph {
  Bitset vertices;
  Bitset edges;

  friend bool operator==(const Subgraph&, const Subgraph&) = default;
  friend bool operator<(const Subgraph& a, const Subgraph& b) {
    if (a.vertices != b.vertices) return a.vertices < b.vertices;
    return a.edges < b.edges;
  }
  bool is_subgraph_of(const Subgraph& other) const {
    return vertices.is_subset_of(other.vertices) &&
           edges.is_subset_of(other.edges);
  }
  Subgraph intersect(const Subgraph& other) const {
    return {vertices & other.vertices, edges & other.edges};
  }
};

struct SubgraphHash {
  std::size_t operator()(const Subgraph& s) const {
    return s.vertices.hash() * 31 + s.edges.hash();
  }
};

// Throws InvalidInput unless widths match the host and every edge has both
// endpoints in the vertex set.
void validate_subgraph(const Multigraph& graph, const Subgraph& sub);

Subgraph empty_subgraph(const Multigraph& graph);
Subgraph whole_graph(const Multigraph& graph);

// Γ:I for vertex indices I. Throws InvalidInput on a foreign vertex.
Subgraph induced_subgraph(const Multigraph& graph,
                          const std::vector<int>& vertex_indices);
Subgraph induced_subgraph(const Multigraph& graph, const Bitset& vertices);

// Connected components of a subgraph as a partition of its vertex set
// (ground set = all host vertices).
PartialPartition components(const Multigraph& graph, const Subgraph& sub);

// A simple closed path in canonical form: rotated so the smallest edge
// index comes first and, for length >= 3, oriented so that edges[1] <
// edges.back(). vertices[i] is where edges[i] is entered; a loop has one
// vertex, a digon is traversed along its smaller edge from that edge's tail.
struct Circle {
  std::vector<int> edges;
  std::vector<int> vertices;

  int length() const { return static_cast<int>(edges.size()); }
  Bitset edge_set(int num_edges) const;
  Bitset vertex_set(int num_vertices) const;
  friend bool operator==(const Circle&, const Circle&) = default;
  friend bool operator<(const Circle& a, const Circle& b) {
    return a.edges < b.edges;
  }
};

// Builds the canonical circle for a closed walk given as an edge sequence
// starting from `start`. Throws InvalidInput unless the walk is a simple
// closed path.
Circle make_circle(const Multigraph& graph, const std::vector<int>& edges,
                   int start);

// Canonical circle with the given edge set, or InvalidInput if the edge set
// is not a circle.
Circle circle_from_edge_set(const Multigraph& graph, const Bitset& edges);

// Independent validator: the edge/vertex sequences form a simple closed
// path in `graph`.
bool is_valid_circle(const Multigraph& graph, const Circle& circle);

// Every circle of the graph (or of the edges in `edge_mask`), each exactly
// once in canonical form, sorted by edge sequence.
std::vector<Circle> circles(const Multigraph& graph,
                            const ScaleGuard& guard = {});
std::vector<Circle> circles(const Multigraph& graph, const Bitset& edge_mask,
                            const ScaleGuard& guard = {});

struct Path {
  std::vector<int> vertices;  // v0 .. vk
  std::vector<int> edges;     // e1 .. ek
};

// All simple paths from u to v (u != v) using edges in `edge_mask`; loops
// never appear on simple paths.
std::vector<Path> simple_paths(const Multigraph& graph, const Bitset& edge_mask,
                               int u, int v);

// Three internally disjoint paths between two distinct vertices, together
// with the three circles formed by pairs of them.
struct Theta {
  int u = 0;
  int v = 0;
  std::array<Path, 3> paths;
  std::array<Circle, 3> circles;  // circles[k] omits paths[k]
  Bitset edges;
};

void for_each_theta(const Multigraph& graph,
                    const std::function<void(const Theta&)>& visit,
                    const ScaleGuard& guard = {});
std::vector<Theta> theta_subgraphs(const Multigraph& graph,
                                   const ScaleGuard& guard = {});

// BFS spanning forest of a subgraph and the fundamental circle of each
// non-forest edge. Roots are the minimum vertex index of each component.
struct ForestDecomposition {
  std::vector<int> component_of;  // -1 outside the subgraph
  int num_components = 0;
  std::vector<int> parent_edge;  // -1 at roots and outside
  std::vector<std::pair<int, Circle>> fundamental;  // (component, circle)
};
ForestDecomposition spanning_forest(const Multigraph& graph,
                                    const Subgraph& sub);

}  // namespace rhodes

#endif  // RHODES_MULTIGRAPH_HPP_
