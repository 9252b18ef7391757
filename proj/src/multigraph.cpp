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

#include "rhodes/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace rhodes {

Multigraph::Multigraph(std::vector<int> vertex_ids,
                       const std::vector<EdgeSpec>& edges)
    : vertex_ids_(std::move(vertex_ids)) {
  std::sort(vertex_ids_.begin(), vertex_ids_.end());
  if (std::adjacent_find(vertex_ids_.begin(), vertex_ids_.end()) !=
      vertex_ids_.end())
    throw InvalidInput("duplicate vertex id");
  for (int i = 0; i < num_vertices(); ++i) vertex_index_[vertex_ids_[i]] = i;
  incident_.resize(vertex_ids_.size());
  edges_.reserve(edges.size());
  for (const auto& spec : edges) {
    if (edge_index_.count(spec.id))
      throw InvalidInput("duplicate edge id " + std::to_string(spec.id));
    const int tail = vertex_index(spec.tail);
    const int head = vertex_index(spec.head);
    const int index = num_edges();
    edge_index_[spec.id] = index;
    edges_.push_back(Edge{spec.id, tail, head});
    incident_[tail].push_back(index);
    if (head != tail) incident_[head].push_back(index);
  }
}

int Multigraph::vertex_index(int id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end())
    throw InvalidInput("unknown vertex id " + std::to_string(id));
  return it->second;
}

int Multigraph::edge_index(int id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end())
    throw InvalidInput("unknown edge id " + std::to_string(id));
  return it->second;
}

Bitset Multigraph::edges_within(const Bitset& vertices) const {
  Bitset out(edges_.size());
  for (int e = 0; e < num_edges(); ++e)
    if (vertices.test(edges_[e].tail) && vertices.test(edges_[e].head))
      out.set(e);
  return out;
}

Bitset Multigraph::endpoints(const Bitset& edges) const {
  Bitset out(vertex_ids_.size());
  edges.for_each([&](std::size_t e) {
    out.set(edges_[e].tail);
    out.set(edges_[e].head);
  });
  return out;
}

bool Multigraph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.is_loop(); });
}

std::vector<std::array<int, 3>> Multigraph::edge_specs() const {
  std::vector<std::array<int, 3>> out;
  for (const auto& e : edges_)
    out.push_back({e.id, vertex_ids_[e.tail], vertex_ids_[e.head]});
  return out;
}

Multigraph complete_graph(int n) {
  if (n < 0) throw InvalidInput("negative vertex count");
  std::vector<int> vs(n);
  std::iota(vs.begin(), vs.end(), 0);
  std::vector<EdgeSpec> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      es.push_back({static_cast<int>(es.size()), i, j});
  return Multigraph(vs, es);
}

Multigraph cycle_graph(int n) {
  if (n < 3) throw InvalidInput("cycle graph needs at least 3 vertices");
  std::vector<int> vs(n);
  std::iota(vs.begin(), vs.end(), 0);
  std::vector<EdgeSpec> es;
  for (int i = 0; i < n; ++i) es.push_back({i, i, (i + 1) % n});
  return Multigraph(vs, es);
}

Multigraph path_graph(int n) {
  if (n < 0) throw InvalidInput("negative path length");
  std::vector<int> vs(n + 1);
  std::iota(vs.begin(), vs.end(), 0);
  std::vector<EdgeSpec> es;
  for (int i = 0; i < n; ++i) es.push_back({i, i, i + 1});
  return Multigraph(vs, es);
}

Multigraph base_graph_from_shorthand(const std::string& name) {
  if (name.size() < 2)
    throw InvalidInput("unknown base graph '" + name + "'");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(name.substr(1), &used);
    if (used != name.size() - 1) throw std::invalid_argument(name);
  } catch (const std::exception&) {
    throw InvalidInput("unknown base graph '" + name + "'");
  }
  switch (name[0]) {
    case 'K':
      return complete_graph(n);
    case 'C':
      return cycle_graph(n);
    case 'P':
      return path_graph(n);
    default:
      throw InvalidInput("unknown base graph '" + name + "'");
  }
}

void validate_subgraph(const Multigraph& graph, const Subgraph& sub) {
  if (static_cast<int>(sub.vertices.size()) != graph.num_vertices() ||
      static_cast<int>(sub.edges.size()) != graph.num_edges())
    throw InvalidInput("subgraph does not belong to this host");
  if (!graph.endpoints(sub.edges).is_subset_of(sub.vertices))
    throw InvalidInput("subgraph edge has an endpoint outside its vertex set");
}

Subgraph empty_subgraph(const Multigraph& graph) {
  return {graph.no_vertices(), graph.no_edges()};
}

Subgraph whole_graph(const Multigraph& graph) {
  return {graph.all_vertices(), graph.all_edges()};
}

Subgraph induced_subgraph(const Multigraph& graph, const Bitset& vertices) {
  if (static_cast<int>(vertices.size()) != graph.num_vertices())
    throw InvalidInput("vertex set does not belong to this host");
  return {vertices, graph.edges_within(vertices)};
}

Subgraph induced_subgraph(const Multigraph& graph,
                          const std::vector<int>& vertex_indices) {
  Bitset vs(graph.num_vertices());
  for (int v : vertex_indices) {
    if (v < 0 || v >= graph.num_vertices())
      throw InvalidInput("foreign vertex index " + std::to_string(v));
    vs.set(v);
  }
  return induced_subgraph(graph, vs);
}

PartialPartition components(const Multigraph& graph, const Subgraph& sub) {
  validate_subgraph(graph, sub);
  const int n = graph.num_vertices();
  std::vector<int> label(n, -1);
  std::vector<std::vector<int>> blocks;
  sub.vertices.for_each([&](std::size_t start) {
    if (label[start] >= 0) return;
    const int id = static_cast<int>(blocks.size());
    blocks.emplace_back();
    std::deque<int> queue{static_cast<int>(start)};
    label[start] = id;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      blocks[id].push_back(v);
      for (int e : graph.incident(v)) {
        if (!sub.edges.test(e)) continue;
        const int w = graph.edge(e).other(v);
        if (label[w] < 0) {
          label[w] = id;
          queue.push_back(w);
        }
      }
    }
  });
  return PartialPartition(n, std::move(blocks));
}

Bitset Circle::edge_set(int num_edges) const {
  Bitset b(num_edges);
  for (int e : edges) b.set(e);
  return b;
}

Bitset Circle::vertex_set(int num_vertices) const {
  Bitset b(num_vertices);
  for (int v : vertices) b.set(v);
  return b;
}

namespace {

// Vertex sequence of a closed walk; validates incidences and simplicity.
std::vector<int> walk_vertices(const Multigraph& graph,
                               const std::vector<int>& edges, int start) {
  if (edges.empty()) throw InvalidInput("a circle needs at least one edge");
  if (start < 0 || start >= graph.num_vertices())
    throw InvalidInput("circle start vertex out of range");
  std::vector<int> vs;
  vs.reserve(edges.size());
  int at = start;
  for (int e : edges) {
    if (e < 0 || e >= graph.num_edges())
      throw InvalidInput("circle edge index out of range");
    const Edge& edge = graph.edge(e);
    if (edge.tail != at && edge.head != at)
      throw InvalidInput("circle edges are not consecutive");
    vs.push_back(at);
    at = edge.other(at);
  }
  if (at != start) throw InvalidInput("walk is not closed");
  std::vector<int> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("walk repeats a vertex");
  std::vector<int> es = edges;
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end())
    throw InvalidInput("walk repeats an edge");
  if (edges.size() > 1)
    for (int e : edges)
      if (graph.edge(e).is_loop())
        throw InvalidInput("a loop cannot lie on a longer circle");
  return vs;
}

}  // namespace

Circle make_circle(const Multigraph& graph, const std::vector<int>& edges,
                   int start) {
  std::vector<int> vs = walk_vertices(graph, edges, start);
  const std::size_t k = edges.size();
  if (k == 1) return Circle{edges, vs};

  const auto min_it = std::min_element(edges.begin(), edges.end());
  const std::size_t pos = static_cast<std::size_t>(min_it - edges.begin());
  std::vector<int> es(k), ws(k);
  for (std::size_t i = 0; i < k; ++i) {
    es[i] = edges[(pos + i) % k];
    ws[i] = vs[(pos + i) % k];
  }
  bool reverse = false;
  if (k == 2) {
    reverse = ws[0] != graph.edge(es[0]).tail;
  } else {
    reverse = es[1] > es.back();
  }
  if (reverse) {
    // Traverse the same circle backwards starting with the same edge.
    std::vector<int> re(k), rw(k);
    re[0] = es[0];
    for (std::size_t i = 1; i < k; ++i) re[i] = es[k - i];
    rw[0] = graph.edge(es[0]).other(ws[0]);
    for (std::size_t i = 1; i < k; ++i) rw[i] = graph.edge(re[i - 1]).other(rw[i - 1]);
    es = std::move(re);
    ws = std::move(rw);
  }
  return Circle{es, ws};
}

bool is_valid_circle(const Multigraph& graph, const Circle& circle) {
  if (circle.edges.empty() || circle.edges.size() != circle.vertices.size())
    return false;
  const std::size_t k = circle.edges.size();
  for (std::size_t i = 0; i < k; ++i) {
    const int e = circle.edges[i];
    if (e < 0 || e >= graph.num_edges()) return false;
    const Edge& edge = graph.edge(e);
    const int from = circle.vertices[i];
    const int to = circle.vertices[(i + 1) % k];
    const bool fits = (edge.tail == from && edge.head == to) ||
                      (edge.head == from && edge.tail == to);
    if (!fits) return false;
    if (k > 1 && edge.is_loop()) return false;
  }
  std::vector<int> vs = circle.vertices, es = circle.edges;
  std::sort(vs.begin(), vs.end());
  std::sort(es.begin(), es.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end() &&
         std::adjacent_find(es.begin(), es.end()) == es.end();
}

Circle circle_from_edge_set(const Multigraph& graph, const Bitset& edges) {
  const auto members = edges.members();
  if (members.empty()) throw InvalidInput("empty edge set is not a circle");
  // Follow the edges from the first one; every vertex must have degree 2
  // within the set (a loop counts twice).
  const int first = members.front();
  std::vector<int> order{first};
  const int start = graph.edge(first).tail;
  int at = graph.edge(first).head;
  int prev = first;
  while (at != start || order.size() < members.size()) {
    int next = -1;
    for (int e : graph.incident(at))
      if (edges.test(e) && e != prev &&
          std::find(order.begin(), order.end(), e) == order.end()) {
        next = e;
        break;
      }
    if (next < 0) break;
    order.push_back(next);
    at = graph.edge(next).other(at);
    prev = next;
  }
  if (order.size() != members.size() || at != start)
    throw InvalidInput("edge set is not a circle");
  return make_circle(graph, order, start);
}

std::vector<Circle> circles(const Multigraph& graph, const ScaleGuard& guard) {
  return circles(graph, graph.all_edges(), guard);
}

std::vector<Circle> circles(const Multigraph& graph, const Bitset& edge_mask,
                            const ScaleGuard& guard) {
  guard.check("max_edges", guard.max_edges, edge_mask.count());
  std::vector<Circle> out;
  const int n = graph.num_vertices();
  std::vector<char> on_path(n, 0);
  std::vector<int> path_edges;

  edge_mask.for_each([&](std::size_t e0u) {
    const int e0 = static_cast<int>(e0u);
    const Edge& first = graph.edge(e0);
    if (first.is_loop()) {
      out.push_back(Circle{{e0}, {first.tail}});
      guard.check("max_circles", guard.max_circles, out.size());
      return;
    }
    // Simple paths head -> tail over edges with larger index.
    const int target = first.tail;
    path_edges.assign(1, e0);
    on_path.assign(n, 0);
    on_path[first.tail] = 1;
    on_path[first.head] = 1;
    auto dfs = [&](auto&& self, int at) -> void {
      for (int e : graph.incident(at)) {
        if (e <= e0 || !edge_mask.test(e)) continue;
        const Edge& edge = graph.edge(e);
        if (edge.is_loop()) continue;
        const int w = edge.other(at);
        if (w == target) {
          path_edges.push_back(e);
          out.push_back(make_circle(graph, path_edges, first.tail));
          guard.check("max_circles", guard.max_circles, out.size());
          path_edges.pop_back();
          continue;
        }
        if (on_path[w]) continue;
        on_path[w] = 1;
        path_edges.push_back(e);
        self(self, w);
        path_edges.pop_back();
        on_path[w] = 0;
      }
    };
    dfs(dfs, first.head);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> simple_paths(const Multigraph& graph, const Bitset& edge_mask,
                               int u, int v) {
  if (u == v) throw InvalidInput("simple_paths needs distinct endpoints");
  std::vector<Path> out;
  std::vector<char> on_path(graph.num_vertices(), 0);
  Path current{{u}, {}};
  on_path[u] = 1;
  auto dfs = [&](auto&& self, int at) -> void {
    for (int e : graph.incident(at)) {
      if (!edge_mask.test(e)) continue;
      const Edge& edge = graph.edge(e);
      if (edge.is_loop()) continue;
      const int w = edge.other(at);
      if (on_path[w]) continue;
      current.vertices.push_back(w);
      current.edges.push_back(e);
      if (w == v) {
        out.push_back(current);
      } else {
        on_path[w] = 1;
        self(self, w);
        on_path[w] = 0;
      }
      current.vertices.pop_back();
      current.edges.pop_back();
    }
  };
  dfs(dfs, u);
  return out;
}

void for_each_theta(const Multigraph& graph,
                    const std::function<void(const Theta&)>& visit,
                    const ScaleGuard& guard) {
  const Bitset all = graph.all_edges();
  guard.check("max_edges", guard.max_edges, all.count());
  const int n = graph.num_vertices();
  std::size_t count = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const auto paths = simple_paths(graph, all, u, v);
      std::vector<Bitset> interior;
      interior.reserve(paths.size());
      for (const auto& p : paths) {
        Bitset in(n);
        for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i)
          in.set(p.vertices[i]);
        interior.push_back(std::move(in));
      }
      auto disjoint = [&](std::size_t a, std::size_t b) {
        if (interior[a].intersects(interior[b])) return false;
        // Two single-edge paths are disjoint iff they are different edges,
        // which they are when a != b.
        return true;
      };
      // Reversed traversal of a path, as an edge list from v back to u.
      auto circle_of = [&](const Path& a, const Path& b) {
        std::vector<int> es = a.edges;
        es.insert(es.end(), b.edges.rbegin(), b.edges.rend());
        return make_circle(graph, es, u);
      };
      for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
          if (!disjoint(i, j)) continue;
          for (std::size_t k = j + 1; k < paths.size(); ++k) {
            if (!disjoint(i, k) || !disjoint(j, k)) continue;
            guard.check("max_thetas", guard.max_thetas, ++count);
            Theta t;
            t.u = u;
            t.v = v;
            t.paths = {paths[i], paths[j], paths[k]};
            t.circles = {circle_of(paths[j], paths[k]),
                         circle_of(paths[i], paths[k]),
                         circle_of(paths[i], paths[j])};
            t.edges = Bitset(graph.num_edges());
            for (const auto& p : t.paths)
              for (int e : p.edges) t.edges.set(e);
            visit(t);
          }
        }
    }
  }
}

std::vector<Theta> theta_subgraphs(const Multigraph& graph,
                                   const ScaleGuard& guard) {
  std::vector<Theta> out;
  for_each_theta(graph, [&](const Theta& t) { out.push_back(t); }, guard);
  return out;
}

ForestDecomposition spanning_forest(const Multigraph& graph,
                                    const Subgraph& sub) {
  const int n = graph.num_vertices();
  ForestDecomposition out;
  out.component_of.assign(n, -1);
  out.parent_edge.assign(n, -1);
  std::vector<int> depth(n, 0);
  Bitset tree(graph.num_edges());

  sub.vertices.for_each([&](std::size_t root) {
    if (out.component_of[root] >= 0) return;
    const int comp = out.num_components++;
    std::deque<int> queue{static_cast<int>(root)};
    out.component_of[root] = comp;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int e : graph.incident(v)) {
        if (!sub.edges.test(e)) continue;
        const int w = graph.edge(e).other(v);
        if (out.component_of[w] < 0) {
          out.component_of[w] = comp;
          out.parent_edge[w] = e;
          depth[w] = depth[v] + 1;
          tree.set(e);
          queue.push_back(w);
        }
      }
    }
  });

  // Fundamental circle of a non-tree edge e = (a, b): e, then the tree path
  // from b up to the common ancestor and down to a.
  sub.edges.for_each([&](std::size_t eu) {
    const int e = static_cast<int>(eu);
    if (tree.test(e)) return;
    const Edge& edge = graph.edge(e);
    if (edge.is_loop()) {
      out.fundamental.emplace_back(out.component_of[edge.tail],
                                   Circle{{e}, {edge.tail}});
      return;
    }
    int a = edge.tail, b = edge.head;
    std::vector<int> from_b, from_a;  // edges climbing from each side
    while (a != b) {
      if (depth[b] >= depth[a]) {
        const int pe = out.parent_edge[b];
        from_b.push_back(pe);
        b = graph.edge(pe).other(b);
      } else {
        const int pe = out.parent_edge[a];
        from_a.push_back(pe);
        a = graph.edge(pe).other(a);
      }
    }
    std::vector<int> walk{e};
    walk.insert(walk.end(), from_b.begin(), from_b.end());
    walk.insert(walk.end(), from_a.rbegin(), from_a.rend());
    out.fundamental.emplace_back(out.component_of[edge.tail],
                                 make_circle(graph, walk, edge.tail));
  });
  return out;
}

}  // namespace rhodes
