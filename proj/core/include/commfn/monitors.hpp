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

// Monitors turn the scenario's correctness conditions into violation hits.
//
//   mutual_exclusion     two processes inside labelled critical sections
//                        at once -> MonitorAssert(name)
//   sent_received_order  exact: every receive takes the oldest pending
//                        message and nothing is pending at termination;
//                        latest: every receive takes the most recent
//                        write -> LostMessage
//   torn_value           a whole read, or the read of the last word of a
//                        word-wise read, yields a value outside the allowed
//                        set -> TornRead
//   recipient_tag        a duplex side reads its own message
//                        -> WrongRecipient
//   lost_unread          a write replaces a message nobody has read
//                        -> LostMessage; on a duplex channel, replacing the
//                        other side's message -> MonitorAssert(name:incoming)
//   terminal_assert      at termination a local or a mechanism holds the
//                        expected value -> MonitorAssert(name)
//
// assert_local steps are checked here as well (MonitorAssert named
// "assert_local:P<p>:<var>").

#ifndef COMMFN_MONITORS_HPP
#define COMMFN_MONITORS_HPP

#include <vector>

#include "commfn/action.hpp"
#include "commfn/state.hpp"
#include "commfn/violation.hpp"

namespace commfn {

class System;

GhostState initial_ghost(const System& system);

/// What the kernel did in one step, as seen by monitors.
struct StepEvent {
  Choice choice;
  int pc = -1;          // instruction executed by choice.process
  int partner_pc = -1;  // receive executed by choice.partner
  Datum observed;       // value read, status checked, or value sent
};

/// Advances `after.ghost` for one step and appends any violations the step
/// causes. `before` is the state the step was taken from.
void observe_step(const System& system, const GlobalState& before,
                  const StepEvent& event, GlobalState& after,
                  std::vector<ViolationClass>& hits);

/// Conditions checked once every process has terminated.
std::vector<ViolationClass> terminal_violations(const System& system,
                                                const GlobalState& state);

}  // namespace commfn

#endif  // COMMFN_MONITORS_HPP
