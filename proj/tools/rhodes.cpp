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

// rhodes: command-line front end for the library.
//
// Exit status: 0 success, 1 a requested check failed, 2 bad input or usage,
// 3 refused by a scale guard.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rhodes/io.hpp"
#include "rhodes/latticekit.hpp"
#include "rhodes/semilattice.hpp"

namespace rhodes {
namespace {

struct CheckFailed {};

ScaleGuard resolve_guard(bool unsafe_flag) {
  const char* env = std::getenv("RHODES_SCALE_GUARD");
  const std::string mode = env ? env : "";
  if (!mode.empty() && mode != "default" && mode != "unsafe")
    throw InvalidInput("RHODES_SCALE_GUARD must be 'default' or 'unsafe', got '" + mode + "'");
  if (unsafe_flag || mode == "unsafe") {
    std::cerr << "rhodes: scale guards lifted ("
              << (unsafe_flag ? "--unsafe-scale" : "RHODES_SCALE_GUARD=unsafe") << ")\n";
    return ScaleGuard::unlimited();
  }
  return ScaleGuard{};
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

void emit_json(const std::string& path, const Json& j) { emit(path, j.dump(2) + "\n"); }

bool is_gain_file(const Json& j) { return j.is_object() && j.contains("group"); }

BiasedGraph load_biased(const Json& j, const ScaleGuard& guard) {
  if (is_gain_file(j)) return from_gains(gain_graph_from_json(j), guard);
  return biased_graph_from_json(j, guard);
}

GainGraph load_gain(const Json& j) {
  if (!is_gain_file(j)) throw InvalidInput("this command needs a gain-graph file");
  return gain_graph_from_json(j);
}

Bitset edge_set(const Multigraph& g, const std::vector<int>& ids) {
  Bitset b(g.num_edges());
  for (int id : ids) b.set(g.edge_index(id));
  return b;
}

Bitset vertex_set(const Multigraph& g, const std::vector<int>& ids,
                  const Bitset& edges) {
  if (ids.empty()) return g.endpoints(edges);
  Bitset b(g.num_vertices());
  for (int id : ids) b.set(g.vertex_index(id));
  return b;
}

Json report(const std::string& check, bool ok) {
  return Json{{"check", check}, {"ok", ok}};
}

// ---------------------------------------------------------------------------

Json verify_iso(const Json& in, const ScaleGuard& guard) {
  const auto r = verify_isomorphism(load_gain(in), guard);
  Json out = report("iso", r.ok);
  out["pp_count"] = r.pp_count;
  out["graphic_count"] = r.graphic_count;
  out["pairs_checked"] = r.pairs_checked;
  if (r.counterexample) out["counterexample"] = *r.counterexample;
  return out;
}

Json verify_order_ideal(const Json& in, const ScaleGuard& guard) {
  const BiasedGraph omega = load_biased(in, guard);
  const auto rb = enumerate_graphic(omega, guard).elements;
  const std::set<Subgraph> expected(rb.begin(), rb.end());
  bool ok = true;
  Json lattices = Json::array();
  for (LatticeKind kind : {LatticeKind::kClassic, LatticeKind::kFrame,
                           LatticeKind::kLift, LatticeKind::kSemiclosed}) {
    const auto lattice = rhodes_lattice(kind, omega, guard);
    const auto idx = balanced_elements(lattice, omega);
    std::set<Subgraph> got;
    for (auto i : idx) got.insert(std::get<Subgraph>(lattice.element(i)));
    const bool equal = got == expected;
    const bool ideal = is_order_ideal(lattice, idx);
    Json entry{{"lattice", to_string(kind)},
               {"elements", lattice.size()},
               {"balanced", idx.size()},
               {"equals_rb", equal},
               {"order_ideal", ideal}};
    if (!equal) {
      for (const auto& s : got)
        if (!expected.count(s)) {
          entry["counterexample"] = subgraph_to_json(omega.graph(), s);
          break;
        }
      if (!entry.contains("counterexample"))
        for (const auto& s : expected)
          if (!got.count(s)) {
            entry["counterexample"] = subgraph_to_json(omega.graph(), s);
            break;
          }
    }
    ok = ok && equal && ideal;
    lattices.push_back(entry);
  }
  Json out = report("order-ideal", ok);
  out["rb_size"] = expected.size();
  out["lattices"] = lattices;
  return out;
}

Json verify_rank_axioms(const Json& in, const ScaleGuard& guard, int samples,
                        unsigned seed) {
  const BiasedGraph omega = load_biased(in, guard);
  const auto& g = omega.graph();
  const Bitset v = g.all_vertices();
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(0.5);
  auto random_edges = [&]() {
    Bitset b(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e)
      if (coin(rng)) b.set(e);
    return b;
  };
  Json out = report("rank-axioms", true);
  Json failures = Json::array();
  auto fail = [&](const std::string& what, MatroidKind kind, const Bitset& s,
                  const Bitset& t) {
    if (failures.size() < 5)
      failures.push_back({{"property", what},
                          {"matroid", to_string(kind)},
                          {"S", subgraph_to_json(g, {v, s})["edges"]},
                          {"T", subgraph_to_json(g, {v, t})["edges"]}});
    out["ok"] = false;
  };
  for (MatroidKind kind : {MatroidKind::kFrame, MatroidKind::kLift}) {
    auto r = [&](const Bitset& s) { return rank(kind, omega, v, s); };
    for (int i = 0; i < samples && g.num_edges() > 0; ++i) {
      const Bitset s = random_edges(), t = random_edges();
      Bitset se = s;
      se.set(std::uniform_int_distribution<int>(0, g.num_edges() - 1)(rng));
      const int rs = r(s);
      if (rs > r(s | t)) fail("monotonicity", kind, s, t);
      if (r(se) < rs || r(se) > rs + 1) fail("unit increase", kind, s, se);
      if (r(s | t) + r(s & t) > rs + r(t)) fail("submodularity", kind, s, t);
      const Bitset cs = closure(kind, omega, v, s);
      if (!s.is_subset_of(cs)) fail("closure extensive", kind, s, cs);
      if (closure(kind, omega, v, cs) != cs) fail("closure idempotent", kind, s, cs);
      if (!cs.is_subset_of(closure(kind, omega, v, s | t))) fail("closure monotone", kind, s, t);
    }
    if (static_cast<std::size_t>(g.num_edges()) <= guard.max_exhaustive_edges) {
      std::set<Bitset> brute;
      const auto m = g.num_edges();
      for (unsigned long bits = 0; bits < (1ul << m); ++bits) {
        Bitset s(m);
        for (int e = 0; e < m; ++e)
          if (bits & (1ul << e)) s.set(e);
        if (is_flat(kind, omega, v, s)) brute.insert(s);
      }
      const auto bfs = flats(kind, omega, v, guard);
      const bool same = std::set<Bitset>(bfs.begin(), bfs.end()) == brute;
      out[to_string(kind) + "_flats"] = bfs.size();
      if (!same) fail("BFS flats equal brute force", kind, g.no_edges(), g.no_edges());
    }
  }
  out["samples_per_matroid"] = samples;
  out["seed"] = seed;
  if (!failures.empty()) out["counterexamples"] = failures;
  return out;
}

Json verify_theta(const Json& in, const ScaleGuard& guard) {
  Multigraph g;
  std::vector<Circle> balanced;
  if (is_gain_file(in)) {
    const GainGraph phi = gain_graph_from_json(in);
    g = phi.graph();
    balanced = balanced_circles(phi, guard);
  } else {
    g = multigraph_from_json(in);
    for (const auto& ids : in.at("balanced").get<std::vector<std::vector<int>>>())
      balanced.push_back(circle_from_edge_set(g, edge_set(g, ids)));
  }
  std::size_t thetas = 0;
  for_each_theta(g, [&](const Theta&) { ++thetas; }, guard);
  const auto bad = find_theta_violation(g, balanced, guard);
  Json out = report("theta", !bad);
  out["balanced_circles"] = balanced.size();
  out["thetas"] = thetas;
  if (bad) out["counterexample"] = subgraph_to_json(g, {g.endpoints(bad->edges), bad->edges});
  return out;
}

Json verify_forms(const Json& in, const ScaleGuard& guard, const std::string& which) {
  const auto fixture = detect_fixture(load_gain(in));
  if (!fixture)
    throw InvalidInput("the forms check needs the Z6 expansion of K4 or C4 (see 'expand')");
  if (which == "semiclosed") {
    const GainGraph phi = make_fixture(*fixture);
    const BiasedGraph omega = from_gains(phi, guard);
    Json out = report("forms", true);
    out["fixture"] = to_string(*fixture);
    out["lattice"] = which;
    std::size_t listed = 0;
    for (const auto& [tag, s] : semiclosed_form_instances(*fixture)) {
      ++listed;
      if (!is_semiclosed(omega, s) && !out.contains("counterexample")) {
        out["ok"] = false;
        out["counterexample"] = {{"form", tag}, {"element", subgraph_to_json(phi.graph(), s)}};
      }
    }
    out["listed_instances"] = listed;
    for (LatticeKind kind : {LatticeKind::kClassic, LatticeKind::kFrame, LatticeKind::kLift}) {
      const auto lattice = rhodes_lattice(kind, omega, guard);
      for (const auto& e : lattice.elements())
        if (!is_top(e) && !is_semiclosed(omega, std::get<Subgraph>(e)) &&
            !out.contains("counterexample")) {
          out["ok"] = false;
          out["counterexample"] = {{"lattice", to_string(kind)},
                                   {"element", subgraph_to_json(phi.graph(), std::get<Subgraph>(e))}};
        }
      out[to_string(kind) + "_elements"] = lattice.size();
    }
    return out;
  }
  const MatroidKind kind = matroid_kind_from_string(which);
  const FormCheck c = check_forms(*fixture, kind, guard);
  Json out = report("forms", c.ok);
  out["fixture"] = to_string(*fixture);
  out["lattice"] = to_string(kind);
  out["elements"] = c.elements;
  out["unbalanced"] = c.unbalanced;
  out["classified"] = c.classified;
  out["instances"] = c.instances;
  out["per_form"] = c.per_form;
  out["unlisted_count"] = c.unlisted_count;
  out["missing_count"] = c.missing_count;
  out["missing_per_form"] = c.missing_per_form;
  out["unlisted"] = c.unlisted;
  out["missing"] = c.missing;
  return out;
}

}  // namespace
}  // namespace rhodes

int main(int argc, char** argv) {
  using namespace rhodes;
  CLI::App app{"Rhodes semilattices and lattices of gain and biased graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  bool unsafe = false;
  app.add_flag("--unsafe-scale", unsafe, "Lift every scale guard");

  std::string input, output, group_spec, base, kind, check, lattice = "frame",
      matroid = "frame", format = "json", p_path, q_path;
  std::vector<int> edges, vertices;
  int samples = 1000;
  unsigned seed = 1;

  auto* expand = app.add_subcommand("expand", "Write the group expansion of a base graph");
  expand->add_option("--group", group_spec, "cyclic:N, ZN or product:A,B,...")->required();
  expand->add_option("--base", base, "Kn, Cn or Pn (Pn has n edges)")->required();
  expand->add_option("-o,--output", output);

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate a semilattice or lattice");
  enumerate->add_option("-i,--input", input)->required()->check(CLI::ExistingFile);
  enumerate->add_option("--kind", kind)->required()->check(CLI::IsMember(
      {"rhodes-pp", "rhodes-graphic", "classic", "frame", "lift", "semiclosed"}));
  enumerate->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  enumerate->add_option("-o,--output", output);

  auto* verify = app.add_subcommand("verify", "Run a check and print a JSON report");
  verify->add_option("-i,--input", input)->required()->check(CLI::ExistingFile);
  verify->add_option("--check", check)->required()->check(
      CLI::IsMember({"iso", "order-ideal", "rank-axioms", "theta", "forms"}));
  verify->add_option("--lattice", lattice, "forms: frame, lift or semiclosed")
      ->check(CLI::IsMember({"frame", "lift", "semiclosed"}));
  verify->add_option("--samples", samples, "rank-axioms samples per matroid");
  verify->add_option("--seed", seed);
  verify->add_option("-o,--output", output);

  auto* dot = app.add_subcommand("export-dot", "Hasse diagram of a lattice file");
  dot->add_option("-i,--input", input)->required()->check(CLI::ExistingFile);
  dot->add_option("-o,--output", output);

  auto* rank_cmd = app.add_subcommand("rank", "Frame or lift rank of an edge set");
  rank_cmd->add_option("-i,--input", input)->required()->check(CLI::ExistingFile);
  rank_cmd->add_option("--matroid", matroid)->check(CLI::IsMember({"frame", "lift"}));
  rank_cmd->add_option("--edges", edges)->delimiter(',');
  rank_cmd->add_option("--vertices", vertices, "Ground vertices (default: endpoints)")
      ->delimiter(',');

  auto* closure_cmd = app.add_subcommand("closure", "Closure of a subgraph");
  closure_cmd->add_option("-i,--input", input)->required()->check(CLI::ExistingFile);
  closure_cmd->add_option("--kind", kind)->required()->check(
      CLI::IsMember({"frame", "lift", "semiclosed", "balanced"}));
  closure_cmd->add_option("--edges", edges)->delimiter(',');
  closure_cmd->add_option("--vertices", vertices)->delimiter(',');

  auto* meet = app.add_subcommand("meet", "Meet of two partition-potential pairs");
  meet->add_option("-i,--input", input)->required()->check(CLI::ExistingFile);
  meet->add_option("--p", p_path)->required()->check(CLI::ExistingFile);
  meet->add_option("--q", q_path)->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    const ScaleGuard guard = resolve_guard(unsafe);
    if (*expand) {
      const GainGraph phi =
          group_expansion(base_graph_from_shorthand(base), group_from_spec(group_spec));
      emit_json(output, gain_graph_to_json(phi));
    } else if (*enumerate) {
      const Json in = read_json_file(input);
      if (kind == "rhodes-pp") {
        const GainGraph phi = load_gain(in);
        const auto poset = pair_poset(phi, enumerate_pp(phi, guard).elements);
        if (format == "dot")
          emit(output, pair_poset_to_dot(phi, poset));
        else
          emit_json(output, pair_poset_to_json(phi, poset));
      } else {
        const BiasedGraph omega = load_biased(in, guard);
        const SubgraphLattice result =
            kind == "rhodes-graphic"
                ? make_subgraph_lattice(enumerate_graphic(omega, guard).elements, false)
                : rhodes_lattice(lattice_kind_from_string(kind), omega, guard);
        if (format == "dot")
          emit(output, lattice_to_dot(omega.graph(), result));
        else
          emit_json(output, lattice_to_json(kind, omega.graph(), result));
      }
    } else if (*verify) {
      const Json in = read_json_file(input);
      Json out;
      if (check == "iso") out = verify_iso(in, guard);
      else if (check == "order-ideal") out = verify_order_ideal(in, guard);
      else if (check == "rank-axioms") out = verify_rank_axioms(in, guard, samples, seed);
      else if (check == "theta") out = verify_theta(in, guard);
      else out = verify_forms(in, guard, lattice);
      emit_json(output, out);
      if (!out["ok"].get<bool>()) throw CheckFailed{};
    } else if (*dot) {
      const Json in = read_json_file(input);
      if (in.is_object() && in.value("kind", "") == "rhodes-pp") {
        const auto [phi, poset] = pair_poset_from_json(in);
        emit(output, pair_poset_to_dot(phi, poset));
      } else {
        Multigraph host;
        const auto result = lattice_from_json(in, &host);
        emit(output, lattice_to_dot(host, result));
      }
    } else if (*rank_cmd) {
      const BiasedGraph omega = load_biased(read_json_file(input), guard);
      const Bitset e = edge_set(omega.graph(), edges);
      const Bitset v = vertex_set(omega.graph(), vertices, e);
      const MatroidKind mk = matroid_kind_from_string(matroid);
      emit_json(output, Json{{"matroid", matroid}, {"rank", rank(mk, omega, v, e)}});
    } else if (*closure_cmd) {
      const BiasedGraph omega = load_biased(read_json_file(input), guard);
      const auto& g = omega.graph();
      const Bitset e = edge_set(g, edges);
      const Subgraph sub{vertex_set(g, vertices, e), e};
      validate_subgraph(g, sub);
      Subgraph result = sub;
      if (kind == "frame" || kind == "lift")
        result.edges = closure(matroid_kind_from_string(kind), omega, sub.vertices, sub.edges);
      else if (kind == "semiclosed")
        result = semiclosed_closure(omega, sub);
      else
        result = closed_balanced_closure(omega, sub);
      emit_json(output, subgraph_to_json(g, result));
    } else if (*meet) {
      const GainGraph phi = load_gain(read_json_file(input));
      const auto p = pair_from_json(phi.group(), phi.graph(), read_json_file(p_path));
      const auto q = pair_from_json(phi.group(), phi.graph(), read_json_file(q_path));
      for (const auto* x : {&p, &q})
        if (!is_phi_connected(phi, *x))
          throw InvalidInput("pair is not phi-connected: " + pair_to_json(phi.graph(), *x).dump());
      emit_json(output, pair_to_json(phi.graph(), meet_pairs(phi, p, q)));
    }
  } catch (const CheckFailed&) {
    return 1;
  } catch (const GuardExceeded& e) {
    std::cerr << "rhodes: refused: " << e.what()
              << " (pass --unsafe-scale to override)\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "rhodes: error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
