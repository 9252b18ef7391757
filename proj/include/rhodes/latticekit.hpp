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

#ifndef RHODES_LATTICEKIT_HPP_
#define RHODES_LATTICEKIT_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rhodes/bias.hpp"
#include "rhodes/gain.hpp"
#include "rhodes/matroid.hpp"
#include "rhodes/poset.hpp"

namespace rhodes {

enum class LatticeKind { kClassic, kFrame, kLift, kSemiclosed };

std::string to_string(LatticeKind kind);
LatticeKind lattice_kind_from_string(const std::string& name);

// Closed balanced subgraphs plus a synthetic top.
SubgraphLattice classic_rhodes_lattice(const BiasedGraph& omega,
                                       const ScaleGuard& guard = {});

// Smallest semiclosed subgraph with the same vertex set containing `sub`.
// Unbalanced input is fine.
Subgraph semiclosed_closure(const BiasedGraph& omega, const Subgraph& sub);
bool is_semiclosed(const BiasedGraph& omega, const Subgraph& sub);

// All (X, S) with S semiclosed in Ω:X. Exhaustive, so bounded by
// guard.max_exhaustive_edges; larger hosts support membership tests only.
std::vector<Subgraph> semiclosed_elements(const BiasedGraph& omega,
                                          const ScaleGuard& guard = {});
SubgraphLattice semiclosed_lattice(const BiasedGraph& omega,
                                   const ScaleGuard& guard = {});

SubgraphLattice rhodes_lattice(LatticeKind kind, const BiasedGraph& omega,
                               const ScaleGuard& guard = {});

// Indices of the subgraph elements that are balanced.
std::vector<std::size_t> balanced_elements(const SubgraphLattice& lattice,
                                           const BiasedGraph& omega);

// Candidate join: the lattice's closure of A ∪ B inside Ω:(V(A) ∪ V(B)).
// For the classic lattice this is the closed balanced closure, or top when
// the union is unbalanced.
LatticeElement closure_join(LatticeKind kind, const BiasedGraph& omega,
                            const LatticeElement& a, const LatticeElement& b);

// Pairs where closure_join is not the least upper bound in `lattice`.
std::vector<std::string> closure_join_violations(LatticeKind kind,
                                                 const BiasedGraph& omega,
                                                 const SubgraphLattice& lattice,
                                                 std::size_t max_reports = 5);

// Human-readable element label using external vertex and edge ids.
std::string describe(const Multigraph& graph, const LatticeElement& element);

// The two expansion fixtures used for the symbolic form lists: Z6 over K4
// and Z6 over C4, as produced by group_expansion.
enum class Fixture { kZ6K4, kZ6C4 };

std::string to_string(Fixture fixture);
GainGraph make_fixture(Fixture fixture);
std::optional<Fixture> detect_fixture(const GainGraph& phi);

// X_i is a set of i vertices, Y_j a disjoint set of j vertices; "Phi:W" is
// the full induced expansion on W, e(Y2) a single edge on Y2.
enum class FormTag {
  kFullX2,           // Phi:X2
  kFullX2PlusY1,     // Phi:X2 ∪ Y1
  kFullX2PlusY2,     // Phi:X2 ∪ Y2
  kFullX2PlusEdgeY2, // Phi:X2 ∪ e(Y2)
  kFullX2PlusFullY2, // Phi:X2 ∪ Phi:Y2
  kFullX3,           // Phi:X3
  kFullX3PlusY1,     // Phi:X3 ∪ Y1
  kWhole,            // Phi
};

std::string to_string(FormTag tag);

struct FormDescriptor {
  FormTag tag;
  std::vector<int> x;  // vertex indices of the full part(s)
  std::vector<int> y;  // remaining vertex indices
  int edge = -1;       // e(Y2), as an edge index
  friend bool operator==(const FormDescriptor&, const FormDescriptor&) = default;
};

// The unbalanced forms listed for the given fixture and matroid lattice.
std::vector<FormTag> listed_forms(Fixture fixture, MatroidKind kind);

// Matches an element of the host against the listed forms. Returns nullopt
// ("unlisted") for balanced elements and for anything matching no listed
// form. Throws InvalidInput when `host` is not the fixture.
std::optional<FormDescriptor> classify_form(Fixture fixture, MatroidKind kind,
                                            const GainGraph& host,
                                            const Subgraph& element);

// Every instance of every listed form, generated from the definitions.
std::vector<std::pair<FormDescriptor, Subgraph>> form_instances(Fixture fixture,
                                                                MatroidKind kind);

struct FormCheck {
  bool ok = false;
  std::size_t elements = 0;
  std::size_t unbalanced = 0;
  std::size_t classified = 0;
  std::size_t instances = 0;
  std::map<std::string, std::size_t> per_form;   // classified elements
  std::map<std::string, std::size_t> missing_per_form;
  std::vector<std::string> unlisted;  // descriptions, capped
  std::vector<std::string> missing;   // descriptions, capped
  std::size_t unlisted_count = 0;
  std::size_t missing_count = 0;
};

// Two-sided comparison of the enumerated matroid lattice against the form
// list: no unbalanced element unlisted, no listed instance missing.
FormCheck check_forms(Fixture fixture, MatroidKind kind,
                      const ScaleGuard& guard = {});

// Semiclosed forms: edgeless vertex sets, nonempty parts A:X2 (with Y1, Y2,
// B:Y2, and on C4 B:X2'), and all switchings of subgroup expansions on the
// X3/X4 (K4) or whole (C4) vertex sets.
std::vector<std::pair<std::string, Subgraph>> semiclosed_form_instances(
    Fixture fixture);

}  // namespace rhodes

#endif  // RHODES_LATTICEKIT_HPP_
