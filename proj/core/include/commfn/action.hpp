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

#ifndef COMMFN_ACTION_HPP
#define COMMFN_ACTION_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "commfn/value.hpp"

namespace commfn {

using ProcessId = int;
using MechanismIndex = int;

inline constexpr MechanismIndex kNoMechanism = -1;
inline constexpr ProcessId kNoProcess = -1;

/// The declaration order of the enumerators is the fixed total order used
/// when branching, so keep it stable.
enum class ActionKind : std::uint8_t {
  Lock,
  Unlock,
  ReadWord,
  WriteWord,
  Read,
  Write,
  CheckStatus,
  Send,
  Receive,
  Update,
  LocalStep,
};

std::string_view to_string(ActionKind k);
std::optional<ActionKind> parse_action_kind(std::string_view s);

struct ActionLabel {
  ActionKind kind = ActionKind::LocalStep;
  std::uint8_t index = 0;  // ReadWord, WriteWord
  Word word = 0;           // WriteWord
  Datum value{};           // Write, Send
  UpdateFn fn{};           // Update

  friend bool operator==(const ActionLabel&, const ActionLabel&) = default;
  friend auto operator<=>(const ActionLabel&, const ActionLabel&) = default;
};

std::string to_string(const ActionLabel& a);

/// One indivisible kernel step. A rendezvous on a DirectChannel is a single
/// choice: `process` sends, `partner` receives.
struct Choice {
  ProcessId process = kNoProcess;
  ActionLabel action{};
  MechanismIndex mech = kNoMechanism;
  ProcessId partner = kNoProcess;

  friend bool operator==(const Choice&, const Choice&) = default;
  friend auto operator<=>(const Choice&, const Choice&) = default;
};

/// Ordered list of choices from the initial state.
using Trace = std::vector<Choice>;

}  // namespace commfn

#endif  // COMMFN_ACTION_HPP
