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

#include "rhodes/latticekit.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "rhodes/semilattice.hpp"

namespace rhodes {

SubgraphLattice make_subgraph_lattice(std::vector<Subgraph> subgraphs,
                                      bool with_top) {
  std::vector<LatticeElement> elements(subgraphs.begin(), subgraphs.end());
  if (with_top) elements.emplace_back(TopElement{});
  return SubgraphLattice::from_order(
      std::move(elements), [](const LatticeElement& a, const LatticeElement& b) {
        if (is_top(b)) return true;
        if (is_top(a)) return false;
        return std::get<Subgraph>(a).is_subgraph_of(std::get<Subgraph>(b));
      });
}

std::string to_string(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::kClassic:
      return "classic";
    case LatticeKind::kFrame:
      return "frame";
    case LatticeKind::kLift:
      return "lift";
    case LatticeKind::kSemiclosed:
      return "semiclosed";
  }
  return "?";
}

LatticeKind lattice_kind_from_string(const std::string& name) {
  if (name == "classic") return LatticeKind::kClassic;
  if (name == "frame") return LatticeKind::kFrame;
  if (name == "lift") return LatticeKind::kLift;
  if (name == "semiclosed") return LatticeKind::kSemiclosed;
  throw InvalidInput("unknown lattice kind '" + name + "'");
}

SubgraphLattice classic_rhodes_lattice(const BiasedGraph& omega,
                                       const ScaleGuard& guard) {
  return make_subgraph_lattice(enumerate_graphic(omega, guard).elements, true);
}

Subgraph semiclosed_closure(const BiasedGraph& omega, const Subgraph& sub) {
  return complete_balanced_circles(omega, sub);
}

bool is_semiclosed(const BiasedGraph& omega, const Subgraph& sub) {
  return semiclosed_closure(omega, sub) == sub;
}

std::vector<Subgraph> semiclosed_elements(const BiasedGraph& omega,
                                          const ScaleGuard& guard) {
  const auto& graph = omega.graph();
  guard.check("max_exhaustive_edges", guard.max_exhaustive_edges,
              static_cast<std::size_t>(graph.num_edges()));
  guard.check("max_vertices", guard.max_vertices, graph.num_vertices());
  std::vector<Subgraph> out;
  for (const Bitset& x : vertex_subsets_lex(graph.num_vertices())) {
    const Bitset within = graph.edges_within(x);
    std::set<Bitset> seen;
    std::vector<Bitset> queue{semiclosed_closure(omega, {x, graph.no_edges()}).edges};
    seen.insert(queue.front());
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Bitset current = queue[head];
      (within - current).for_each([&](std::size_t e) {
        Subgraph grown{x, current};
        grown.edges.set(e);
        Bitset closed = semiclosed_closure(omega, grown).edges;
        if (seen.insert(closed).second) queue.push_back(std::move(closed));
      });
    }
    for (const auto& edges : seen) out.push_back({x, edges});
    guard.check("max_elements", guard.max_elements, out.size());
  }
  return out;
}

SubgraphLattice semiclosed_lattice(const BiasedGraph& omega,
                                   const ScaleGuard& guard) {
  return make_subgraph_lattice(semiclosed_elements(omega, guard), false);
}

SubgraphLattice rhodes_lattice(LatticeKind kind, const BiasedGraph& omega,
                               const ScaleGuard& guard) {
  switch (kind) {
    case LatticeKind::kClassic:
      return classic_rhodes_lattice(omega, guard);
    case LatticeKind::kFrame:
      return frame_rhodes_lattice(omega, guard);
    case LatticeKind::kLift:
      return lift_rhodes_lattice(omega, guard);
    case LatticeKind::kSemiclosed:
      return semiclosed_lattice(omega, guard);
  }
  throw InvalidInput("unknown lattice kind");
}

std::vector<std::size_t> balanced_elements(const SubgraphLattice& lattice,
                                           const BiasedGraph& omega) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto& e = lattice.element(i);
    if (!is_top(e) && is_balanced(omega, std::get<Subgraph>(e))) out.push_back(i);
  }
  return out;
}

LatticeElement closure_join(LatticeKind kind, const BiasedGraph& omega,
                            const LatticeElement& a, const LatticeElement& b) {
  if (is_top(a) || is_top(b)) return TopElement{};
  const auto& sa = std::get<Subgraph>(a);
  const auto& sb = std::get<Subgraph>(b);
  Subgraph u{sa.vertices | sb.vertices, sa.edges | sb.edges};
  switch (kind) {
    case LatticeKind::kClassic:
      if (!is_balanced(omega, u)) return TopElement{};
      return closed_balanced_closure(omega, u);
    case LatticeKind::kFrame:
      return Subgraph{u.vertices,
                      closure(MatroidKind::kFrame, omega, u.vertices, u.edges)};
    case LatticeKind::kLift:
      return Subgraph{u.vertices,
                      closure(MatroidKind::kLift, omega, u.vertices, u.edges)};
    case LatticeKind::kSemiclosed:
      return semiclosed_closure(omega, u);
  }
  throw InvalidInput("unknown lattice kind");
}

std::string describe(const Multigraph& graph, const LatticeElement& element) {
  if (is_top(element)) return "TOP";
  const auto& s = std::get<Subgraph>(element);
  std::string out = "V{";
  for (int v : s.vertices.members()) out += std::to_string(graph.vertex_id(v)) + ",";
  if (out.back() == ',') out.pop_back();
  out += "} E{";
  for (int e : s.edges.members()) out += std::to_string(graph.edge(e).id) + ",";
  if (out.back() == ',') out.pop_back();
  return out + "}";
}

std::vector<std::string> closure_join_violations(LatticeKind kind,
                                                 const BiasedGraph& omega,
                                                 const SubgraphLattice& lattice,
                                                 std::size_t max_reports) {
  std::unordered_map<Subgraph, std::size_t, SubgraphHash> index;
  std::optional<std::size_t> top_index;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto& e = lattice.element(i);
    if (is_top(e))
      top_index = i;
    else
      index.emplace(std::get<Subgraph>(e), i);
  }
  const auto& graph = omega.graph();
  std::vector<std::string> out;
  for (std::size_t a = 0; a < lattice.size() && out.size() < max_reports; ++a)
    for (std::size_t b = a + 1; b < lattice.size() && out.size() < max_reports; ++b) {
      const auto candidate =
          closure_join(kind, omega, lattice.element(a), lattice.element(b));
      std::optional<std::size_t> at;
      if (is_top(candidate)) {
        at = top_index;
      } else if (auto it = index.find(std::get<Subgraph>(candidate));
                 it != index.end()) {
        at = it->second;
      }
      const auto lub = lattice.join(a, b);
      if (!at || at != lub) {
        out.push_back("closure of the union of " +
                      describe(graph, lattice.element(a)) + " and " +
                      describe(graph, lattice.element(b)) + " is " +
                      describe(graph, candidate) +
                      (at ? "" : " (not an element)") + ", least upper bound " +
                      (lub ? describe(graph, lattice.element(*lub)) : "none"));
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// Fixtures and symbolic forms.

std::string to_string(Fixture fixture) {
  return fixture == Fixture::kZ6K4 ? "Z6.K4" : "Z6.C4";
}

GainGraph make_fixture(Fixture fixture) {
  return group_expansion(fixture == Fixture::kZ6K4 ? complete_graph(4)
                                                   : cycle_graph(4),
                         make_cyclic(6));
}

std::optional<Fixture> detect_fixture(const GainGraph& phi) {
  for (Fixture f : {Fixture::kZ6K4, Fixture::kZ6C4})
    if (phi == make_fixture(f)) return f;
  return std::nullopt;
}

std::string to_string(FormTag tag) {
  switch (tag) {
    case FormTag::kFullX2:
      return "Phi:X2";
    case FormTag::kFullX2PlusY1:
      return "Phi:X2+Y1";
    case FormTag::kFullX2PlusY2:
      return "Phi:X2+Y2";
    case FormTag::kFullX2PlusEdgeY2:
      return "Phi:X2+e(Y2)";
    case FormTag::kFullX2PlusFullY2:
      return "Phi:X2+Phi:Y2";
    case FormTag::kFullX3:
      return "Phi:X3";
    case FormTag::kFullX3PlusY1:
      return "Phi:X3+Y1";
    case FormTag::kWhole:
      return "Phi";
  }
  return "?";
}

std::vector<FormTag> listed_forms(Fixture fixture, MatroidKind kind) {
  using enum FormTag;
  if (kind == MatroidKind::kFrame)
    return {kFullX2, kFullX2PlusY1, kFullX2PlusY2, kFullX2PlusEdgeY2,
            kFullX3, kFullX3PlusY1, kWhole};
  if (fixture == Fixture::kZ6K4)
    return {kFullX2, kFullX2PlusY1, kFullX2PlusY2, kFullX2PlusFullY2,
            kFullX3, kFullX3PlusY1, kWhole};
  // The C4 lift list keeps e(Y2) alongside Phi:X2 ∪ Phi:Y2.
  return {kFullX2, kFullX2PlusY1, kFullX2PlusY2, kFullX2PlusEdgeY2,
          kFullX3, kFullX3PlusY1, kFullX2PlusFullY2, kWhole};
}

std::optional<FormDescriptor> classify_form(Fixture fixture, MatroidKind kind,
                                            const GainGraph& host,
                                            const Subgraph& element) {
  if (!(host == make_fixture(fixture)))
    throw InvalidInput("host is not the " + to_string(fixture) + " fixture");
  const auto& graph = host.graph();
  validate_subgraph(graph, element);
  if (is_balanced_subgraph(host, element)) return std::nullopt;

  // Sort components into full induced parts, isolated vertices, single-edge
  // parts; anything else matches no form.
  std::vector<std::vector<int>> full;
  std::vector<int> isolated;
  std::vector<std::pair<std::vector<int>, int>> single_edge;
  const auto comps = components(graph, element);
  for (const auto& block : comps.blocks()) {
    Bitset w(graph.num_vertices());
    for (int v : block) w.set(v);
    const Bitset induced = graph.edges_within(w);
    const Bitset present = induced & element.edges;
    if (block.size() == 1 && present.none()) {
      isolated.push_back(block.front());
    } else if (block.size() >= 2 && present == induced) {
      full.push_back(block);
    } else if (block.size() == 2 && present.count() == 1) {
      single_edge.emplace_back(block, present.first());
    } else {
      return std::nullopt;
    }
  }

  std::optional<FormDescriptor> out;
  auto flatten = [](const std::vector<std::vector<int>>& parts) {
    std::vector<int> v;
    for (const auto& p : parts) v.insert(v.end(), p.begin(), p.end());
    std::sort(v.begin(), v.end());
    return v;
  };
  const std::size_t n = static_cast<std::size_t>(graph.num_vertices());
  if (full.size() == 1 && single_edge.empty()) {
    const auto& x = full.front();
    if (x.size() == n && isolated.empty())
      out = FormDescriptor{FormTag::kWhole, x, {}, -1};
    else if (x.size() == 3 && isolated.empty())
      out = FormDescriptor{FormTag::kFullX3, x, {}, -1};
    else if (x.size() == 3 && isolated.size() == 1)
      out = FormDescriptor{FormTag::kFullX3PlusY1, x, isolated, -1};
    else if (x.size() == 2 && isolated.empty())
      out = FormDescriptor{FormTag::kFullX2, x, {}, -1};
    else if (x.size() == 2 && isolated.size() == 1)
      out = FormDescriptor{FormTag::kFullX2PlusY1, x, isolated, -1};
    else if (x.size() == 2 && isolated.size() == 2)
      out = FormDescriptor{FormTag::kFullX2PlusY2, x, isolated, -1};
  } else if (full.size() == 1 && single_edge.size() == 1 && isolated.empty() &&
             full.front().size() == 2) {
    out = FormDescriptor{FormTag::kFullX2PlusEdgeY2, full.front(),
                         single_edge.front().first, single_edge.front().second};
  } else if (full.size() == 2 && single_edge.empty() && isolated.empty() &&
             full[0].size() == 2 && full[1].size() == 2) {
    out = FormDescriptor{FormTag::kFullX2PlusFullY2, flatten(full), {}, -1};
  }
  if (!out) return std::nullopt;
  const auto listed = listed_forms(fixture, kind);
  if (std::find(listed.begin(), listed.end(), out->tag) == listed.end())
    return std::nullopt;
  return out;
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  for (const auto& s : vertex_subsets_lex(n))
    if (static_cast<int>(s.count()) == k) out.push_back(s.members());
  return out;
}

Bitset as_bitset(int width, const std::vector<int>& members) {
  Bitset b(width);
  for (int m : members) b.set(m);
  return b;
}

std::vector<int> complement(int n, const std::vector<int>& s) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (std::find(s.begin(), s.end(), v) == s.end()) out.push_back(v);
  return out;
}

}  // namespace

std::vector<std::pair<FormDescriptor, Subgraph>> form_instances(Fixture fixture,
                                                                MatroidKind kind) {
  const GainGraph phi = make_fixture(fixture);
  const auto& graph = phi.graph();
  const int n = graph.num_vertices();
  const Bitset all_v = graph.all_vertices();
  auto full_on = [&](const std::vector<int>& w) {
    return graph.edges_within(as_bitset(n, w));
  };
  // X2 ranges over vertex pairs that carry base edges (every pair in K4, the
  // four circle edges in C4).
  std::vector<std::vector<int>> pairs;
  for (const auto& p : subsets_of_size(n, 2))
    if (full_on(p).any()) pairs.push_back(p);

  std::vector<std::pair<FormDescriptor, Subgraph>> out;
  std::unordered_set<Subgraph, SubgraphHash> seen;
  auto emit = [&](FormDescriptor d, Subgraph s) {
    if (seen.insert(s).second) out.emplace_back(std::move(d), std::move(s));
  };
  for (FormTag tag : listed_forms(fixture, kind)) {
    switch (tag) {
      case FormTag::kFullX2:
        for (const auto& x : pairs) emit({tag, x, {}, -1}, {as_bitset(n, x), full_on(x)});
        break;
      case FormTag::kFullX2PlusY1:
        for (const auto& x : pairs)
          for (int y : complement(n, x)) {
            auto vs = x;
            vs.push_back(y);
            emit({tag, x, {y}, -1}, {as_bitset(n, vs), full_on(x)});
          }
        break;
      case FormTag::kFullX2PlusY2:
        for (const auto& x : pairs)
          emit({tag, x, complement(n, x), -1}, {all_v, full_on(x)});
        break;
      case FormTag::kFullX2PlusEdgeY2:
        for (const auto& x : pairs) {
          const auto y = complement(n, x);
          full_on(y).for_each([&](std::size_t e) {
            Bitset edges = full_on(x);
            edges.set(e);
            emit({tag, x, y, static_cast<int>(e)}, {all_v, edges});
          });
        }
        break;
      case FormTag::kFullX2PlusFullY2:
        for (const auto& x : pairs) {
          const auto y = complement(n, x);
          if (full_on(y).none()) continue;
          auto both = x;
          both.insert(both.end(), y.begin(), y.end());
          std::sort(both.begin(), both.end());
          emit({tag, both, {}, -1}, {all_v, full_on(x) | full_on(y)});
        }
        break;
      case FormTag::kFullX3:
        for (const auto& x : subsets_of_size(n, 3))
          emit({tag, x, {}, -1}, {as_bitset(n, x), full_on(x)});
        break;
      case FormTag::kFullX3PlusY1:
        for (const auto& x : subsets_of_size(n, 3))
          emit({tag, x, complement(n, x), -1}, {all_v, full_on(x)});
        break;
      case FormTag::kWhole:
        emit({tag, complement(n, {}), {}, -1}, whole_graph(graph));
        break;
    }
  }
  return out;
}

FormCheck check_forms(Fixture fixture, MatroidKind kind, const ScaleGuard& guard) {
  const GainGraph phi = make_fixture(fixture);
  const auto& graph = phi.graph();
  const BiasedGraph omega = from_gains(phi, guard);
  const SubgraphLattice lattice = matroid_rhodes_lattice(kind, omega, guard);

  constexpr std::size_t kCap = 10;
  FormCheck check;
  check.elements = lattice.size();
  std::unordered_set<Subgraph, SubgraphHash> present;
  std::unordered_set<Subgraph, SubgraphHash> classified;
  for (const auto& e : lattice.elements()) {
    const auto& s = std::get<Subgraph>(e);
    present.insert(s);
    if (is_balanced_subgraph(phi, s)) continue;
    ++check.unbalanced;
    if (auto d = classify_form(fixture, kind, phi, s)) {
      ++check.classified;
      ++check.per_form[to_string(d->tag)];
      classified.insert(s);
    } else {
      ++check.unlisted_count;
      if (check.unlisted.size() < kCap) check.unlisted.push_back(describe(graph, e));
    }
  }
  const auto instances = form_instances(fixture, kind);
  check.instances = instances.size();
  std::unordered_set<Subgraph, SubgraphHash> generated;
  for (const auto& [d, s] : instances) {
    generated.insert(s);
    if (!present.count(s)) {
      ++check.missing_count;
      ++check.missing_per_form[to_string(d.tag)];
      if (check.missing.size() < kCap)
        check.missing.push_back(to_string(d.tag) + " " + describe(graph, s));
    }
  }
  bool consistent = true;
  for (const auto& s : classified) consistent = consistent && generated.count(s);
  check.ok = consistent && check.unlisted_count == 0 && check.missing_count == 0;
  return check;
}

std::vector<std::pair<std::string, Subgraph>> semiclosed_form_instances(
    Fixture fixture) {
  const GainGraph phi = make_fixture(fixture);
  const auto& graph = phi.graph();
  const auto& group = phi.group();
  const int n = graph.num_vertices();
  const Bitset all_v = graph.all_vertices();
  auto full_on = [&](const std::vector<int>& w) {
    return graph.edges_within(as_bitset(n, w));
  };
  // Nonempty subsets of an edge set.
  auto nonempty_parts = [](const Bitset& edges) {
    const auto m = edges.members();
    std::vector<Bitset> out;
    for (unsigned mask = 1; mask < (1u << m.size()); ++mask) {
      Bitset b(edges.size());
      for (std::size_t i = 0; i < m.size(); ++i)
        if (mask & (1u << i)) b.set(m[i]);
      out.push_back(std::move(b));
    }
    return out;
  };

  std::vector<std::pair<std::string, Subgraph>> out;
  std::set<std::pair<std::string, Subgraph>> seen;
  auto emit = [&](const std::string& tag, Subgraph s) {
    if (seen.emplace(tag, s).second) out.emplace_back(tag, std::move(s));
  };

  for (const auto& x : vertex_subsets_lex(n)) emit("X_i", {x, graph.no_edges()});

  std::vector<std::vector<int>> pairs;
  for (const auto& p : subsets_of_size(n, 2))
    if (full_on(p).any()) pairs.push_back(p);
  for (const auto& x : pairs) {
    const auto y = complement(n, x);
    const auto parts = nonempty_parts(full_on(x));
    for (const auto& a : parts) {
      emit("A:X2", {as_bitset(n, x), a});
      for (int v : y) {
        auto vs = x;
        vs.push_back(v);
        emit("A:X2+Y1", {as_bitset(n, vs), a});
      }
      emit("A:X2+Y2", {all_v, a});
      if (full_on(y).any())
        for (const auto& b : nonempty_parts(full_on(y)))
          emit("A:X2+B:Y2", {all_v, a | b});
    }
  }
  if (fixture == Fixture::kZ6C4) {
    // Adjacent circle edges sharing one vertex.
    for (std::size_t i = 0; i < pairs.size(); ++i)
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        if (i == j) continue;
        std::vector<int> shared;
        std::set_intersection(pairs[i].begin(), pairs[i].end(), pairs[j].begin(),
                              pairs[j].end(), std::back_inserter(shared));
        if (shared.size() != 1) continue;
        const Bitset vs = as_bitset(n, pairs[i]) | as_bitset(n, pairs[j]);
        for (const auto& a : nonempty_parts(full_on(pairs[i])))
          for (const auto& b : nonempty_parts(full_on(pairs[j])))
            emit("A:X2+B:X2'", {vs, a | b});
      }
  }

  // Switchings of subgroup expansions on W: edge (e, g) survives when
  // g = zeta(tail)^-1 h zeta(head) for some h in H.
  const std::string base = fixture == Fixture::kZ6K4 ? "K4" : "C4";
  std::vector<std::pair<std::string, std::vector<int>>> supports;
  if (fixture == Fixture::kZ6K4)
    for (const auto& x : subsets_of_size(n, 3)) supports.emplace_back("X3", x);
  supports.emplace_back("", complement(n, {}));
  for (const auto& h : subgroups(group)) {
    for (const auto& [label, w] : supports) {
      std::vector<int> digits(w.size(), 0);
      while (true) {
        Bitset edges(graph.num_edges());
        graph.edges_within(as_bitset(n, w)).for_each([&](std::size_t e) {
          const Edge& edge = graph.edge(static_cast<int>(e));
          const auto pos = [&](int v) {
            return static_cast<std::size_t>(
                std::find(w.begin(), w.end(), v) - w.begin());
          };
          const GroupElement zt(digits[pos(edge.tail)]), zh(digits[pos(edge.head)]);
          for (int hv : h) {
            const GroupElement g = group.compose(
                group.compose(group.inverse(zt), GroupElement(hv)), zh);
            if (phi.gain(static_cast<int>(e)) == g) edges.set(e);
          }
        });
        const std::string tag = "H." + base + (label.empty() ? "" : ":" + label);
        emit(tag, {as_bitset(n, w), edges});
        if (!label.empty()) emit(tag + "+Y1", {all_v, edges});
        std::size_t i = digits.size();
        while (i > 0 && ++digits[i - 1] == group.order()) digits[--i] = 0;
        if (i == 0) break;
      }
    }
  }
  return out;
}

}  // namespace rhodes
