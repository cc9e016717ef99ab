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

// Deterministic stepping engine. All functions are pure: states go in,
// new states come out.

#ifndef COMMFN_KERNEL_HPP
#define COMMFN_KERNEL_HPP

#include <vector>

#include "commfn/action.hpp"
#include "commfn/state.hpp"
#include "commfn/system.hpp"
#include "commfn/violation.hpp"

namespace commfn {

/// Every indivisible step available in `state`, sorted by process, then
/// action, then mechanism, then partner. A rendezvous appears once per
/// (sender, receiver) pair with the sender as `process`.
std::vector<Choice> enabled_actions(const System& system,
                                    const GlobalState& state);

struct StepOutcome {
  GlobalState state;
  std::vector<ViolationClass> hits;  // raised by monitors during the step
};

/// Applies `choice` and advances monitor state. Throws std::invalid_argument
/// if `choice` is not enabled.
StepOutcome advance(const System& system, const GlobalState& state,
                    const Choice& choice);

/// `advance` without the enabledness check; `choice` must come from
/// `enabled_actions(system, state)`.
StepOutcome advance_unchecked(const System& system, const GlobalState& state,
                              const Choice& choice);

/// `advance(...).state`.
GlobalState step(const System& system, const GlobalState& state,
                 const Choice& choice);

/// Unterminated processes that are stuck on a value they cannot use (an
/// empty indicator where a message is required).
std::vector<ProcessId> faulted_processes(const System& system,
                                         const GlobalState& state);

/// Violations that are properties of a state rather than of a step:
/// Deadlock (nothing enabled, something unterminated), faults, and the
/// terminal monitors when every process has terminated.
std::vector<ViolationClass> state_violations(const System& system,
                                             const GlobalState& state);

/// Replays `trace` from the initial state. Throws NotEnabledAtStep at the
/// first event that is not enabled.
GlobalState replay(const System& system, const Trace& trace);

struct ReplayRecord {
  GlobalState final_state;
  std::vector<GlobalState> states;                 // after each event
  std::vector<std::vector<ViolationClass>> hits;   // per event
  std::vector<ViolationClass> final_violations;    // state_violations(final)
};

ReplayRecord replay_recorded(const System& system, const Trace& trace);

/// Whether replaying `trace` ends by exhibiting `violation`: raised by the
/// last event, or a property of the final state.
bool reproduces(const System& system, const Trace& trace,
                const ViolationClass& violation);

}  // namespace commfn

#endif  // COMMFN_KERNEL_HPP
