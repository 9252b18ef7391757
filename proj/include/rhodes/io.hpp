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

#ifndef RHODES_IO_HPP_
#define RHODES_IO_HPP_

#include <string>

#include <json.hpp>

#include "rhodes/bias.hpp"
#include "rhodes/gain.hpp"
#include "rhodes/latticekit.hpp"
#include "rhodes/semilattice.hpp"

namespace rhodes {

using Json = nlohmann::ordered_json;

// Groups: {"kind":"cyclic","n":6} or {"kind":"table","table":[[...]]}.
Json group_to_json(const GroupTable& group);
GroupTable group_from_json(const Json& j);
// "cyclic:6", "Z6", or "product:2,3".
GroupTable group_from_spec(const std::string& spec);

// {"group":..., "vertices":[...], "edges":[{"id","tail","head","gain"}]}
// with external vertex and edge ids.
Json gain_graph_to_json(const GainGraph& phi);
GainGraph gain_graph_from_json(const Json& j);

// {"vertices":[...], "edges":[{"id","tail","head"}], "balanced":[[edge ids]]}
Json biased_graph_to_json(const BiasedGraph& omega);
BiasedGraph biased_graph_from_json(const Json& j, const ScaleGuard& guard = {});

Json multigraph_to_json(const Multigraph& graph);
Multigraph multigraph_from_json(const Json& j);

// {"vertices":[ids], "edges":[ids]}
Json subgraph_to_json(const Multigraph& graph, const Subgraph& sub);
Subgraph subgraph_from_json(const Multigraph& graph, const Json& j);

// {"blocks":[[ids]], "rep":{"id": element index}}
Json pair_to_json(const Multigraph& graph, const PartitionPotentialPair& p);
PartitionPotentialPair pair_from_json(const GroupTable& group,
                                      const Multigraph& graph, const Json& j);

// {"kind", "host", "elements":[subgraph | {"top":true}], "hasse":[[lo,hi]]}.
// Reading rebuilds the order from the Hasse pairs and checks it against
// containment.
Json lattice_to_json(const std::string& kind, const Multigraph& host,
                     const SubgraphLattice& lattice);
SubgraphLattice lattice_from_json(const Json& j, Multigraph* host = nullptr);

// Phi-connected pairs ordered by pair_leq, stored like a lattice file with
// kind "rhodes-pp", the gain graph as host and pairs as elements.
using PairPoset = FinitePoset<PartitionPotentialPair>;
PairPoset pair_poset(const GainGraph& phi, std::vector<PartitionPotentialPair> pairs);
Json pair_poset_to_json(const GainGraph& phi, const PairPoset& poset);
std::pair<GainGraph, PairPoset> pair_poset_from_json(const Json& j);
std::string pair_poset_to_dot(const GainGraph& phi, const PairPoset& poset);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

// Graphviz rendering of the Hasse diagram; top is drawn as a box.
std::string lattice_to_dot(const Multigraph& host, const SubgraphLattice& lattice);

}  // namespace rhodes

#endif  // RHODES_IO_HPP_
