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

#include "rhodes/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace rhodes {

namespace {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidInput(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad field '") + key + "': " + e.what());
  }
}

std::vector<int> ids_of(const Bitset& b, const std::vector<int>& ids) {
  std::vector<int> out;
  b.for_each([&](std::size_t i) { out.push_back(ids[i]); });
  return out;
}

std::vector<int> edge_ids(const Multigraph& graph) {
  std::vector<int> out;
  for (const auto& e : graph.edges()) out.push_back(e.id);
  return out;
}

bool is_cyclic(const GroupTable& group) {
  return group == make_cyclic(group.order());
}

}  // namespace

Json group_to_json(const GroupTable& group) {
  if (is_cyclic(group)) return Json{{"kind", "cyclic"}, {"n", group.order()}};
  return Json{{"kind", "table"}, {"label", group.label()}, {"table", group.table()}};
}

GroupTable group_from_json(const Json& j) {
  const auto kind = field<std::string>(j, "kind");
  if (kind == "cyclic") return make_cyclic(field<int>(j, "n"));
  if (kind == "table") {
    const std::string label = j.contains("label") ? field<std::string>(j, "label") : "table";
    return GroupTable(field<std::vector<std::vector<int>>>(j, "table"), label);
  }
  throw InvalidInput("unknown group kind '" + kind + "'");
}

GroupTable group_from_spec(const std::string& spec) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw InvalidInput("bad group spec '" + spec + "'");
    return v;
  };
  if (spec.rfind("cyclic:", 0) == 0) return make_cyclic(to_int(spec.substr(7)));
  if (spec.size() > 1 && spec[0] == 'Z') return make_cyclic(to_int(spec.substr(1)));
  if (spec.rfind("product:", 0) == 0) {
    std::stringstream in(spec.substr(8));
    std::string part;
    std::optional<GroupTable> out;
    while (std::getline(in, part, ',')) {
      GroupTable factor = make_cyclic(to_int(part));
      out = out ? make_direct_product(*out, factor) : factor;
    }
    if (!out) throw InvalidInput("bad group spec '" + spec + "'");
    return *out;
  }
  throw InvalidInput("bad group spec '" + spec + "' (try cyclic:6)");
}

Json multigraph_to_json(const Multigraph& graph) {
  Json edges = Json::array();
  for (const auto& e : graph.edges())
    edges.push_back({{"id", e.id},
                     {"tail", graph.vertex_id(e.tail)},
                     {"head", graph.vertex_id(e.head)}});
  return Json{{"vertices", graph.vertex_ids()}, {"edges", edges}};
}

Multigraph multigraph_from_json(const Json& j) {
  std::vector<EdgeSpec> specs;
  const auto edges = field<Json>(j, "edges");
  if (!edges.is_array()) throw InvalidInput("'edges' must be an array");
  for (const auto& e : edges)
    specs.push_back({field<int>(e, "id"), field<int>(e, "tail"), field<int>(e, "head")});
  return Multigraph(field<std::vector<int>>(j, "vertices"), specs);
}

Json gain_graph_to_json(const GainGraph& phi) {
  Json j = multigraph_to_json(phi.graph());
  for (std::size_t i = 0; i < j["edges"].size(); ++i)
    j["edges"][i]["gain"] = phi.gain(static_cast<int>(i)).index;
  Json out{{"group", group_to_json(phi.group())}};
  out.update(j);
  return out;
}

GainGraph gain_graph_from_json(const Json& j) {
  GroupTable group = group_from_json(field<Json>(j, "group"));
  Multigraph graph = multigraph_from_json(j);
  std::vector<GroupElement> gains(graph.num_edges());
  for (const auto& e : j.at("edges"))
    gains[graph.edge_index(field<int>(e, "id"))] = GroupElement(field<int>(e, "gain"));
  return GainGraph(std::move(graph), std::move(group), std::move(gains));
}

Json biased_graph_to_json(const BiasedGraph& omega) {
  Json j = multigraph_to_json(omega.graph());
  Json balanced = Json::array();
  for (const auto& c : omega.balanced()) {
    Json ids = Json::array();
    for (int e : c.edges) ids.push_back(omega.graph().edge(e).id);
    balanced.push_back(ids);
  }
  j["balanced"] = balanced;
  return j;
}

BiasedGraph biased_graph_from_json(const Json& j, const ScaleGuard& guard) {
  Multigraph graph = multigraph_from_json(j);
  std::vector<Circle> balanced;
  for (const auto& ids : field<std::vector<std::vector<int>>>(j, "balanced")) {
    Bitset edges(graph.num_edges());
    for (int id : ids) edges.set(graph.edge_index(id));
    if (edges.count() != ids.size())
      throw InvalidInput("balanced circle repeats an edge");
    balanced.push_back(circle_from_edge_set(graph, edges));
  }
  return BiasedGraph(std::move(graph), std::move(balanced), guard);
}

Json subgraph_to_json(const Multigraph& graph, const Subgraph& sub) {
  return Json{{"vertices", ids_of(sub.vertices, graph.vertex_ids())},
              {"edges", ids_of(sub.edges, edge_ids(graph))}};
}

Subgraph subgraph_from_json(const Multigraph& graph, const Json& j) {
  Subgraph s = empty_subgraph(graph);
  for (int v : field<std::vector<int>>(j, "vertices")) s.vertices.set(graph.vertex_index(v));
  for (int e : field<std::vector<int>>(j, "edges")) s.edges.set(graph.edge_index(e));
  validate_subgraph(graph, s);
  return s;
}

Json pair_to_json(const Multigraph& graph, const PartitionPotentialPair& p) {
  Json blocks = Json::array();
  Json rep = Json::object();
  for (const auto& block : p.partition().blocks()) {
    Json ids = Json::array();
    for (int v : block) {
      ids.push_back(graph.vertex_id(v));
      rep[std::to_string(graph.vertex_id(v))] = p.system.rep_at(v).index;
    }
    blocks.push_back(ids);
  }
  return Json{{"blocks", blocks}, {"rep", rep}};
}

PartitionPotentialPair pair_from_json(const GroupTable& group,
                                      const Multigraph& graph, const Json& j) {
  std::vector<std::vector<int>> blocks;
  for (const auto& ids : field<std::vector<std::vector<int>>>(j, "blocks")) {
    std::vector<int> block;
    for (int id : ids) block.push_back(graph.vertex_index(id));
    blocks.push_back(block);
  }
  PartialPartition pi(graph.num_vertices(), blocks);
  PotentialFunction theta(graph.num_vertices());
  const auto rep = field<Json>(j, "rep");
  if (!rep.is_object()) throw InvalidInput("'rep' must be an object");
  for (const auto& [key, value] : rep.items()) {
    int id = 0;
    try {
      id = std::stoi(key);
    } catch (const std::exception&) {
      throw InvalidInput("bad vertex id '" + key + "' in rep");
    }
    if (!value.is_number_integer()) throw InvalidInput("rep values must be integers");
    const GroupElement g(value.get<int>());
    group.check(g);
    theta.values[graph.vertex_index(id)] = g;
  }
  return make_pp_pair(group, pi, theta);
}

Json lattice_to_json(const std::string& kind, const Multigraph& host,
                     const SubgraphLattice& lattice) {
  Json elements = Json::array();
  for (const auto& e : lattice.elements())
    elements.push_back(is_top(e) ? Json{{"top", true}}
                                 : subgraph_to_json(host, std::get<Subgraph>(e)));
  Json hasse = Json::array();
  for (const auto& [lo, hi] : lattice.hasse()) hasse.push_back({lo, hi});
  return Json{{"kind", kind},
              {"host", multigraph_to_json(host)},
              {"elements", elements},
              {"hasse", hasse}};
}

SubgraphLattice lattice_from_json(const Json& j, Multigraph* host) {
  Multigraph graph = multigraph_from_json(field<Json>(j, "host"));
  std::vector<LatticeElement> elements;
  for (const auto& e : field<Json>(j, "elements")) {
    if (e.contains("top"))
      elements.emplace_back(TopElement{});
    else
      elements.emplace_back(subgraph_from_json(graph, e));
  }
  const std::size_t n = elements.size();
  std::vector<Bitset> rows(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) rows[i].set(i);
  for (const auto& edge : field<std::vector<std::vector<std::size_t>>>(j, "hasse")) {
    if (edge.size() != 2 || edge[0] >= n || edge[1] >= n)
      throw InvalidInput("bad Hasse pair");
    rows[edge[0]].set(edge[1]);
  }
  // Transitive closure; the stored pairs are covers, so a reverse pass over
  // a linear extension would also do, but n is small.
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < n; ++i) {
      Bitset row = rows[i];
      rows[i].for_each([&](std::size_t k) { row |= rows[k]; });
      if (!(row == rows[i])) {
        rows[i] = std::move(row);
        grew = true;
      }
    }
  }
  SubgraphLattice lattice(std::move(elements), std::move(rows));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& ea = lattice.element(a);
      const auto& eb = lattice.element(b);
      const bool contained =
          is_top(eb) || (!is_top(ea) && std::get<Subgraph>(ea).is_subgraph_of(
                                            std::get<Subgraph>(eb)));
      if (lattice.leq(a, b) != contained)
        throw InvalidInput("stored order disagrees with containment at (" +
                           std::to_string(a) + ", " + std::to_string(b) + ")");
    }
  if (host) *host = std::move(graph);
  return lattice;
}

PairPoset pair_poset(const GainGraph& phi, std::vector<PartitionPotentialPair> pairs) {
  const GroupTable& group = phi.group();
  return PairPoset::from_order(std::move(pairs),
                               [&](const PartitionPotentialPair& a,
                                   const PartitionPotentialPair& b) {
                                 return pair_leq(group, a, b);
                               });
}

Json pair_poset_to_json(const GainGraph& phi, const PairPoset& poset) {
  Json elements = Json::array();
  for (const auto& p : poset.elements()) elements.push_back(pair_to_json(phi.graph(), p));
  Json hasse = Json::array();
  for (const auto& [lo, hi] : poset.hasse()) hasse.push_back({lo, hi});
  return Json{{"kind", "rhodes-pp"},
              {"host", gain_graph_to_json(phi)},
              {"elements", elements},
              {"hasse", hasse}};
}

std::pair<GainGraph, PairPoset> pair_poset_from_json(const Json& j) {
  if (field<std::string>(j, "kind") != "rhodes-pp")
    throw InvalidInput("not a rhodes-pp file");
  GainGraph phi = gain_graph_from_json(field<Json>(j, "host"));
  std::vector<PartitionPotentialPair> pairs;
  for (const auto& e : field<Json>(j, "elements"))
    pairs.push_back(pair_from_json(phi.group(), phi.graph(), e));
  PairPoset poset = pair_poset(phi, std::move(pairs));
  std::set<std::pair<std::size_t, std::size_t>> stored;
  for (const auto& edge : field<std::vector<std::vector<std::size_t>>>(j, "hasse")) {
    if (edge.size() != 2) throw InvalidInput("bad Hasse pair");
    stored.emplace(edge[0], edge[1]);
  }
  const auto h = poset.hasse();
  if (stored != std::set<std::pair<std::size_t, std::size_t>>(h.begin(), h.end()))
    throw InvalidInput("stored Hasse diagram disagrees with the pair order");
  return {std::move(phi), std::move(poset)};
}

std::string pair_poset_to_dot(const GainGraph& phi, const PairPoset& poset) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=ellipse, fontsize=10];\n";
  for (std::size_t i = 0; i < poset.size(); ++i) {
    std::string label = pair_to_json(phi.graph(), poset.element(i)).dump();
    std::string escaped;
    for (char c : label) {
      if (c == '"') escaped += '\\';
      escaped += c;
    }
    out << "  n" << i << " [label=\"" << escaped << "\"];\n";
  }
  for (const auto& [lo, hi] : poset.hasse()) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::string lattice_to_dot(const Multigraph& host, const SubgraphLattice& lattice) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=ellipse, fontsize=10];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto& e = lattice.element(i);
    out << "  n" << i << " [label=\"" << describe(host, e) << "\"";
    if (is_top(e)) out << ", shape=box, style=bold";
    out << "];\n";
  }
  for (const auto& [lo, hi] : lattice.hasse())
    out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace rhodes
