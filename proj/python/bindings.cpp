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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rhodes/io.hpp"
#include "rhodes/latticekit.hpp"
#include "rhodes/semilattice.hpp"

namespace py = pybind11;

namespace rhodes {
namespace {

// Results cross the boundary as JSON text; the Python wrapper decodes it.
std::string dump(const Json& j) { return j.dump(); }

ScaleGuard guard_for(bool unsafe) { return unsafe ? ScaleGuard::unlimited() : ScaleGuard{}; }

BiasedGraph to_biased(const py::object& host, bool unsafe) {
  if (py::isinstance<GainGraph>(host)) return from_gains(host.cast<GainGraph>(), guard_for(unsafe));
  return host.cast<BiasedGraph>();
}

Bitset edge_bits(const Multigraph& g, const std::vector<int>& ids) {
  Bitset b(g.num_edges());
  for (int id : ids) b.set(g.edge_index(id));
  return b;
}

Bitset vertex_bits(const Multigraph& g, const std::optional<std::vector<int>>& ids,
                   const Bitset& edges) {
  if (!ids) return g.endpoints(edges);
  Bitset b(g.num_vertices());
  for (int id : *ids) b.set(g.vertex_index(id));
  return b;
}

}  // namespace
}  // namespace rhodes

PYBIND11_MODULE(_rhodes, m) {
  using namespace rhodes;
  m.doc() = "Rhodes semilattices and lattices of gain and biased graphs";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);

  py::class_<GainGraph>(m, "GainGraph")
      .def_static("expand",
                  [](const std::string& group, const std::string& base) {
                    return group_expansion(base_graph_from_shorthand(base),
                                           group_from_spec(group));
                  },
                  py::arg("group"), py::arg("base"))
      .def_static("from_json",
                  [](const std::string& text) { return gain_graph_from_json(Json::parse(text)); })
      .def("to_json", [](const GainGraph& phi) { return dump(gain_graph_to_json(phi)); })
      .def_property_readonly("num_vertices", [](const GainGraph& p) { return p.graph().num_vertices(); })
      .def_property_readonly("num_edges", [](const GainGraph& p) { return p.graph().num_edges(); })
      .def_property_readonly("group_order", [](const GainGraph& p) { return p.group().order(); })
      .def("__eq__", [](const GainGraph& a, const GainGraph& b) { return a == b; });

  py::class_<BiasedGraph>(m, "BiasedGraph")
      .def_static("from_json",
                  [](const std::string& text, bool unsafe) {
                    return biased_graph_from_json(Json::parse(text), guard_for(unsafe));
                  },
                  py::arg("text"), py::arg("unsafe_scale") = false)
      .def_static("from_gains",
                  [](const GainGraph& phi, bool unsafe) { return from_gains(phi, guard_for(unsafe)); },
                  py::arg("phi"), py::arg("unsafe_scale") = false)
      .def("to_json", [](const BiasedGraph& o) { return dump(biased_graph_to_json(o)); })
      .def_property_readonly("num_balanced_circles",
                             [](const BiasedGraph& o) { return o.balanced().size(); });

  m.def("rhodes_pp",
        [](const GainGraph& phi, bool unsafe) {
          Json out = Json::array();
          for (const auto& p : enumerate_pp(phi, guard_for(unsafe)).elements)
            out.push_back(pair_to_json(phi.graph(), p));
          return dump(out);
        },
        py::arg("phi"), py::arg("unsafe_scale") = false);

  m.def("rhodes_graphic",
        [](const py::object& host, bool unsafe) {
          const BiasedGraph omega = to_biased(host, unsafe);
          Json out = Json::array();
          for (const auto& s : enumerate_graphic(omega, guard_for(unsafe)).elements)
            out.push_back(subgraph_to_json(omega.graph(), s));
          return dump(out);
        },
        py::arg("host"), py::arg("unsafe_scale") = false);

  m.def("verify_isomorphism",
        [](const GainGraph& phi, bool unsafe) {
          const auto r = verify_isomorphism(phi, guard_for(unsafe));
          Json out{{"ok", r.ok}, {"pp_count", r.pp_count}, {"graphic_count", r.graphic_count},
                   {"pairs_checked", r.pairs_checked}};
          if (r.counterexample) out["counterexample"] = *r.counterexample;
          return dump(out);
        },
        py::arg("phi"), py::arg("unsafe_scale") = false);

  m.def("lattice",
        [](const py::object& host, const std::string& kind, bool unsafe) {
          const BiasedGraph omega = to_biased(host, unsafe);
          const auto l = rhodes_lattice(lattice_kind_from_string(kind), omega, guard_for(unsafe));
          return dump(lattice_to_json(kind, omega.graph(), l));
        },
        py::arg("host"), py::arg("kind"), py::arg("unsafe_scale") = false);

  m.def("probe_lattice",
        [](const py::object& host, const std::string& kind, bool unsafe) {
          const BiasedGraph omega = to_biased(host, unsafe);
          const auto l = rhodes_lattice(lattice_kind_from_string(kind), omega, guard_for(unsafe));
          const auto p = probe_lattice(l, [&](std::size_t i) { return describe(omega.graph(), l.element(i)); });
          return dump(Json{{"elements", p.elements}, {"is_lattice", p.is_lattice},
                           {"atomistic", p.atomistic}, {"semimodular", p.semimodular},
                           {"geometric", p.geometric}, {"atoms", p.atoms},
                           {"witnesses", p.witnesses}});
        },
        py::arg("host"), py::arg("kind"), py::arg("unsafe_scale") = false);

  m.def("rank",
        [](const py::object& host, const std::string& matroid, const std::vector<int>& edges,
           const std::optional<std::vector<int>>& vertices) {
          const BiasedGraph omega = to_biased(host, false);
          const Bitset e = edge_bits(omega.graph(), edges);
          return rank(matroid_kind_from_string(matroid), omega,
                      vertex_bits(omega.graph(), vertices, e), e);
        },
        py::arg("host"), py::arg("matroid"), py::arg("edges"), py::arg("vertices") = py::none());

  m.def("closure",
        [](const py::object& host, const std::string& kind, const std::vector<int>& edges,
           const std::optional<std::vector<int>>& vertices) {
          const BiasedGraph omega = to_biased(host, false);
          const auto& g = omega.graph();
          const Bitset e = edge_bits(g, edges);
          Subgraph sub{vertex_bits(g, vertices, e), e};
          validate_subgraph(g, sub);
          if (kind == "semiclosed") sub = semiclosed_closure(omega, sub);
          else if (kind == "balanced") sub = closed_balanced_closure(omega, sub);
          else sub.edges = closure(matroid_kind_from_string(kind), omega, sub.vertices, sub.edges);
          return dump(subgraph_to_json(g, sub));
        },
        py::arg("host"), py::arg("kind"), py::arg("edges"), py::arg("vertices") = py::none());

  m.def("meet",
        [](const GainGraph& phi, const std::string& p, const std::string& q) {
          const auto a = pair_from_json(phi.group(), phi.graph(), Json::parse(p));
          const auto b = pair_from_json(phi.group(), phi.graph(), Json::parse(q));
          return dump(pair_to_json(phi.graph(), meet_pairs(phi, a, b)));
        },
        py::arg("phi"), py::arg("p"), py::arg("q"));

  m.def("b_map",
        [](const GainGraph& phi, const std::string& p) {
          const auto a = pair_from_json(phi.group(), phi.graph(), Json::parse(p));
          return dump(subgraph_to_json(phi.graph(), b_map(phi, a)));
        },
        py::arg("phi"), py::arg("pair"));

  m.def("check_forms",
        [](const std::string& fixture, const std::string& matroid) {
          Fixture f;
          if (fixture == "Z6.K4") f = Fixture::kZ6K4;
          else if (fixture == "Z6.C4") f = Fixture::kZ6C4;
          else throw InvalidInput("fixture must be Z6.K4 or Z6.C4");
          const FormCheck c = check_forms(f, matroid_kind_from_string(matroid));
          return dump(Json{{"ok", c.ok}, {"elements", c.elements}, {"unbalanced", c.unbalanced},
                           {"classified", c.classified}, {"instances", c.instances},
                           {"per_form", c.per_form}, {"missing_per_form", c.missing_per_form},
                           {"unlisted_count", c.unlisted_count},
                           {"missing_count", c.missing_count}});
        },
        py::arg("fixture"), py::arg("matroid"));
}
