// Copyright 2026 The commfn Authors
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

// Exhaustive interleaving search over a compiled scenario.

#ifndef COMMFN_EXPLORER_HPP
#define COMMFN_EXPLORER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "commfn/action.hpp"
#include "commfn/scenario.hpp"
#include "commfn/state.hpp"
#include "commfn/system.hpp"
#include "commfn/violation.hpp"

namespace commfn {

struct Violation {
  ViolationClass cls;
  Trace trace;               // first trace found, replays to the violation
  std::uint64_t state_hash = 0;
  /// Distinct (class, state) pairs exhibiting the class.
  std::uint64_t occurrences = 0;
};

struct ExplorationReport {
  std::uint64_t states_visited = 0;
  std::uint64_t distinct_terminal_states = 0;
  std::uint64_t deadlock_states = 0;
  /// Maximal schedules from the initial state; unset when bounds were hit
  /// or the count overflowed.
  std::optional<std::uint64_t> schedules_complete;
  std::vector<Violation> violations;  // sorted by class
  bool bounds_hit = false;

  std::set<ViolationClass> classes() const;
  const Violation* find(const ViolationClass& cls) const;
};

struct ExploreOptions {
  /// Called once per distinct visited state, in DFS discovery order.
  std::function<void(const GlobalState&)> on_state;
};

/// Depth-first search with a visited set keyed on the canonical encoding.
/// Monitors run on every edge, including edges into visited states.
ExplorationReport explore(const System& system, const Bounds& bounds,
                          const ExploreOptions& options = {});
ExplorationReport explore(const System& system);

/// Breadth-first search for a minimum-length trace exhibiting `kind`
/// (restricted to monitor `name` when given). nullopt when none is
/// reachable within bounds.
std::optional<Violation> find_shortest(
    const System& system, ViolationKind kind, const Bounds& bounds,
    const std::optional<std::string>& name = std::nullopt);

struct RandomWalkSummary {
  std::uint64_t runs = 0;
  std::set<ViolationClass> classes;
  /// A witness trace per class, the first walk that saw it.
  std::vector<std::pair<ViolationClass, Trace>> witnesses;
};

/// Independent cross-check: `runs` schedules each choosing uniformly among
/// enabled actions, driven by a seeded std::mt19937_64.
RandomWalkSummary random_walk(const System& system, std::uint64_t runs,
                              std::uint64_t seed, int max_depth);

}  // namespace commfn

#endif  // COMMFN_EXPLORER_HPP
