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

#ifndef RHODES_ERROR_HPP_
#define RHODES_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace rhodes {

// Malformed or inconsistent input: foreign elements, broken incidences,
// non-associative tables, theta violations.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A precondition on the mathematical object failed (e.g. asking for a
// potential of an unbalanced subgraph).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An exhaustive computation would exceed an explicit scale limit.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(std::string guard, std::size_t limit, std::size_t actual)
      : std::runtime_error("scale guard '" + guard + "' exceeded: limit " +
                           std::to_string(limit) + ", got " +
                           std::to_string(actual)),
        guard_(std::move(guard)) {}
  const std::string& guard() const { return guard_; }

 private:
  std::string guard_;
};

// Limits on the exhaustive enumerations. Everything here is desk scale;
// the defaults make accidental exponential runs fail fast.
struct ScaleGuard {
  std::size_t max_edges = 40;          // circle / theta enumeration
  std::size_t max_circles = 200000;
  std::size_t max_thetas = 2000000;
  std::size_t max_vertices = 8;        // per-vertex-subset enumerations
  std::size_t max_elements = 200000;   // elements of an enumerated lattice
  std::size_t max_exhaustive_edges = 12;  // subset brute force
  std::size_t max_group_order = 64;

  static ScaleGuard unlimited();

  void check(const char* name, std::size_t limit, std::size_t actual) const {
    if (actual > limit) throw GuardExceeded(name, limit, actual);
  }
};

inline ScaleGuard ScaleGuard::unlimited() {
  constexpr std::size_t kHuge = static_cast<std::size_t>(-1) / 4;
  ScaleGuard g;
  g.max_edges = g.max_circles = g.max_thetas = kHuge;
  g.max_vertices = 30;
  g.max_elements = kHuge;
  g.max_exhaustive_edges = 30;
  g.max_group_order = 1024;
  return g;
}

}  // namespace rhodes

#endif  // RHODES_ERROR_HPP_
