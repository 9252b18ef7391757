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

// The Rhodes semilattice of a gain graph in its two representations:
// partition-potential pairs, and closed balanced subgraphs ordered by
// inclusion. b_map carries the first onto the second.

#ifndef RHODES_SEMILATTICE_HPP_
#define RHODES_SEMILATTICE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "rhodes/bias.hpp"
#include "rhodes/gain.hpp"
#include "rhodes/partition.hpp"

namespace rhodes {

// (pi, [theta]_pi). The partition is the one carried by the system.
struct PartitionPotentialPair {
  PotentialSystem system;

  const PartialPartition& partition() const { return system.partition(); }
  friend bool operator==(const PartitionPotentialPair&,
                         const PartitionPotentialPair&) = default;
  friend bool operator<(const PartitionPotentialPair& a,
                        const PartitionPotentialPair& b) {
    return a.system < b.system;
  }
};

PartitionPotentialPair make_pp_pair(const GroupTable& group,
                                    const PartialPartition& pi,
                                    const PotentialFunction& theta);

struct RhodesSemilatticePP {
  std::vector<PartitionPotentialPair> elements;
};

struct RhodesSemilatticeGraphic {
  std::vector<Subgraph> elements;
};

// B(pi, [theta]_pi): vertex set supp pi, and every edge inside a block whose
// gain equals theta(v)^-1 theta(w).
Subgraph b_map(const GainGraph& phi, const PartitionPotentialPair& p);

// Each block spans a connected component of b_map(phi, p).
bool is_phi_connected(const GainGraph& phi, const PartitionPotentialPair& p);

// (tau, [eta]) <= (pi, [theta]): tau refines pi and [theta]_tau = [eta]_tau.
bool pair_leq(const GroupTable& group, const PartitionPotentialPair& lower,
              const PartitionPotentialPair& upper);

// Balanced and closed under balanced-circle completion.
bool is_closed_balanced(const BiasedGraph& omega, const Subgraph& sub);
bool is_closed_balanced(const GainGraph& phi, const Subgraph& sub,
                        const ScaleGuard& guard = {});

// Smallest closed balanced subgraph with the same vertex set containing a
// balanced `sub`. Throws PreconditionError on unbalanced input.
Subgraph closed_balanced_closure(const BiasedGraph& omega, const Subgraph& sub);

// (components(B), canonical potential of B). Throws PreconditionError unless
// B is closed and balanced.
PartitionPotentialPair pair_of(const GainGraph& phi, const Subgraph& closed,
                               const ScaleGuard& guard = {});

// Meet of two phi-connected pairs. Blocks of the pointwise relation are
// refined into connected components of their image so the result is
// phi-connected; `refined`, when given, reports whether that step changed
// anything.
PartitionPotentialPair meet_pairs(const GainGraph& phi,
                                  const PartitionPotentialPair& p,
                                  const PartitionPotentialPair& q,
                                  bool* refined = nullptr);

// Closed balanced subgraphs, grouped by vertex set (vertex sets in
// lexicographic order), each group in canonical order.
RhodesSemilatticeGraphic enumerate_graphic(const BiasedGraph& omega,
                                           const ScaleGuard& guard = {});
RhodesSemilatticeGraphic enumerate_graphic(const GainGraph& phi,
                                           const ScaleGuard& guard = {});

// All phi-connected partition-potential pairs, ordered by partial partition
// then canonical representative.
RhodesSemilatticePP enumerate_pp(const GainGraph& phi,
                                 const ScaleGuard& guard = {});

struct IsomorphismReport {
  bool ok = false;
  std::size_t pp_count = 0;
  std::size_t graphic_count = 0;
  std::size_t pairs_checked = 0;
  std::optional<std::string> counterexample;
};

// b_map is a bijection R(phi) -> R^b(phi) with p <= q iff b_map(p) ⊆ b_map(q).
IsomorphismReport verify_isomorphism(const GainGraph& phi,
                                     const ScaleGuard& guard = {});

}  // namespace rhodes

#endif  // RHODES_SEMILATTICE_HPP_
