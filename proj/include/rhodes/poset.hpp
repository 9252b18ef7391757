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

#ifndef RHODES_POSET_HPP_
#define RHODES_POSET_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rhodes/bitset.hpp"
#include "rhodes/error.hpp"
#include "rhodes/multigraph.hpp"

namespace rhodes {

// A finite poset over an indexed list of payloads. The order is stored as
// up-sets (up_[i] holds every j with i <= j) and down-sets.
template <class T>
class FinitePoset {
 public:
  FinitePoset() = default;

  // leq_rows[i].test(j) iff element i <= element j. Throws InvalidInput
  // unless the relation is reflexive, antisymmetric and transitive.
  FinitePoset(std::vector<T> elements, std::vector<Bitset> leq_rows)
      : elements_(std::move(elements)), up_(std::move(leq_rows)) {
    const std::size_t n = elements_.size();
    if (up_.size() != n) throw InvalidInput("relation size mismatch");
    down_.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) {
      if (up_[i].size() != n) throw InvalidInput("relation row width mismatch");
      if (!up_[i].test(i)) throw InvalidInput("relation is not reflexive");
      up_[i].for_each([&](std::size_t j) { down_[j].set(i); });
    }
    for (std::size_t i = 0; i < n; ++i) {
      bool ok = true;
      up_[i].for_each([&](std::size_t j) {
        if (!ok) return;
        if (j != i && up_[j].test(i)) ok = false;
        if (!up_[j].is_subset_of(up_[i])) ok = false;
      });
      if (!ok)
        throw InvalidInput("relation is not antisymmetric and transitive at " +
                           std::to_string(i));
    }
  }

  template <class Leq>
  static FinitePoset from_order(std::vector<T> elements, Leq leq) {
    const std::size_t n = elements.size();
    std::vector<Bitset> rows(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq(elements[i], elements[j])) rows[i].set(j);
    return FinitePoset(std::move(elements), std::move(rows));
  }

  std::size_t size() const { return elements_.size(); }
  const T& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<T>& elements() const { return elements_; }
  bool leq(std::size_t i, std::size_t j) const { return up_.at(i).test(j); }
  const Bitset& up(std::size_t i) const { return up_.at(i); }
  const Bitset& down(std::size_t i) const { return down_.at(i); }

  // j covers i.
  bool covers(std::size_t j, std::size_t i) const {
    return i != j && leq(i, j) && (up_[i] & down_[j]).count() == 2;
  }

  // Covering pairs (lower, upper), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> hasse() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i)
      up_[i].for_each([&](std::size_t j) {
        if (covers(j, i)) out.emplace_back(i, j);
      });
    return out;
  }

  // Greatest lower bound / least upper bound, if they exist.
  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const {
    return extreme(down_[a] & down_[b], down_);
  }
  std::optional<std::size_t> join(std::size_t a, std::size_t b) const {
    return extreme(up_[a] & up_[b], up_);
  }

  std::optional<std::size_t> bottom() const {
    return extreme(Bitset::full(size()), up_);
  }
  std::optional<std::size_t> top() const {
    return extreme(Bitset::full(size()), down_);
  }

 private:
  // The member m of `bounds` whose `cone[m]` contains all of `bounds`.
  std::optional<std::size_t> extreme(const Bitset& bounds,
                                     const std::vector<Bitset>& cone) const {
    std::optional<std::size_t> found;
    bounds.for_each([&](std::size_t m) {
      if (!found && bounds.is_subset_of(cone[m])) found = m;
    });
    return found;
  }

  std::vector<T> elements_;
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
};

// Downward closure test. Throws InvalidInput on an index outside the poset.
template <class T>
bool is_order_ideal(const FinitePoset<T>& poset,
                    const std::vector<std::size_t>& subset) {
  Bitset members(poset.size());
  for (auto i : subset) {
    if (i >= poset.size()) throw InvalidInput("index outside the poset");
    members.set(i);
  }
  for (auto i : subset)
    if (!poset.down(i).is_subset_of(members)) return false;
  return true;
}

struct LatticeProbe {
  std::size_t elements = 0;
  std::size_t pairs = 0;
  bool all_meets = true;
  bool all_joins = true;
  bool is_lattice = false;
  bool atomistic = false;
  bool semimodular = false;
  bool geometric = false;
  std::size_t atoms = 0;
  std::vector<std::string> witnesses;  // one per failed property, first found
};

// Checks existence of all meets and joins, then atomicity (every element is
// a join of atoms) and upper semimodularity (if a covers a∧b then a∨b covers
// b). Geometric = lattice + atomistic + semimodular.
template <class T>
LatticeProbe probe_lattice(
    const FinitePoset<T>& poset,
    const std::function<std::string(std::size_t)>& label =
        [](std::size_t i) { return "#" + std::to_string(i); }) {
  LatticeProbe report;
  const std::size_t n = poset.size();
  report.elements = n;
  std::vector<std::vector<std::size_t>> meets(n, std::vector<std::size_t>(n)),
      joins(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      ++report.pairs;
      auto m = poset.meet(a, b);
      auto j = poset.join(a, b);
      if (!m && report.all_meets) {
        report.all_meets = false;
        report.witnesses.push_back("no meet for " + label(a) + " and " + label(b));
      }
      if (!j && report.all_joins) {
        report.all_joins = false;
        report.witnesses.push_back("no join for " + label(a) + " and " + label(b));
      }
      meets[a][b] = meets[b][a] = m.value_or(n);
      joins[a][b] = joins[b][a] = j.value_or(n);
    }
  report.is_lattice = n > 0 && report.all_meets && report.all_joins;
  if (!report.is_lattice) return report;

  const std::size_t bottom = *poset.bottom();
  std::vector<std::size_t> atoms;
  for (std::size_t a = 0; a < n; ++a)
    if (poset.covers(a, bottom)) atoms.push_back(a);
  report.atoms = atoms.size();

  report.atomistic = true;
  for (std::size_t x = 0; x < n && report.atomistic; ++x) {
    std::size_t acc = bottom;
    for (auto a : atoms)
      if (poset.leq(a, x)) acc = joins[acc][a];
    if (acc != x) {
      report.atomistic = false;
      report.witnesses.push_back(label(x) +
                                 " is not the join of the atoms below it");
    }
  }

  report.semimodular = true;
  for (std::size_t a = 0; a < n && report.semimodular; ++a)
    for (std::size_t b = 0; b < n && report.semimodular; ++b) {
      if (poset.covers(a, meets[a][b]) && !poset.covers(joins[a][b], b)) {
        report.semimodular = false;
        report.witnesses.push_back(
            label(a) + " covers its meet with " + label(b) +
            " but their join " + label(joins[a][b]) + " does not cover " +
            label(b));
      }
    }
  report.geometric = report.atomistic && report.semimodular;
  return report;
}

// Payloads of the subgraph lattices: a subgraph of the host, or the
// synthetic top element of the classic lattice.
struct TopElement {
  friend bool operator==(const TopElement&, const TopElement&) = default;
};
using LatticeElement = std::variant<Subgraph, TopElement>;
using SubgraphLattice = FinitePoset<LatticeElement>;

inline bool is_top(const LatticeElement& e) {
  return std::holds_alternative<TopElement>(e);
}

// Subgraphs ordered by containment, optionally with a top above all.
SubgraphLattice make_subgraph_lattice(std::vector<Subgraph> subgraphs,
                                      bool with_top);

}  // namespace rhodes

#endif  // RHODES_POSET_HPP_
