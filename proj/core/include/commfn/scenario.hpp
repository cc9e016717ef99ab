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

// Scenario model: mechanisms, process programs and monitors, exactly as they
// appear in a scenario document. Positions are carried for diagnostics and
// ignored by equality.

#ifndef COMMFN_SCENARIO_HPP
#define COMMFN_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "commfn/action.hpp"
#include "commfn/mechanism.hpp"
#include "commfn/value.hpp"

namespace commfn {

struct SourcePos {
  int line = 0;  // 1-based; 0 when unknown
  int column = 0;

  friend bool operator==(const SourcePos&, const SourcePos&) {
    return true;
  }
};

std::string to_string(const SourcePos& pos);

struct Bounds {
  std::int64_t max_depth = 200;
  std::int64_t max_states = 1'000'000;
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// A literal value, the `empty` indicator, or a bound variable.
struct ValueExpr {
  enum class Kind : std::uint8_t { Literal, Empty, Variable };
  Kind kind = Kind::Literal;
  Value literal{};
  std::string var;
  friend bool operator==(const ValueExpr&, const ValueExpr&) = default;
};

/// A literal word, or the word at the same index of a bound variable.
struct WordExpr {
  bool is_var = false;
  Word literal = 0;
  std::string var;
  friend bool operator==(const WordExpr&, const WordExpr&) = default;
};

enum class StepKind : std::uint8_t {
  Write,
  Read,
  Send,
  Receive,
  Lock,
  Unlock,
  ReadWord,
  WriteWord,
  Check,
  Update,
  Loop,
  IfStatus,
  AssertLocal,
  Local,
  // Extensions beyond the core vocabulary.
  Apply,      // apply a built-in update function to a local variable
  AwaitWord,  // block until a word holds a given value (a spin loop)
  IfWord,     // read one word and branch on it
  Select,     // offer several first steps; whichever is taken runs its block
};

std::string_view to_string(StepKind k);

struct Step;
using Block = std::vector<Step>;

/// One program step. Which fields are meaningful depends on `kind`; see the
/// scenario format in the README.
struct Step {
  StepKind kind = StepKind::Local;
  std::string mech;
  std::string var;
  ValueExpr value{};
  WordExpr word{};
  int index = 0;
  UpdateFn fn{};
  int count = 0;
  Block body;       // loop body, if_status full branch, if_word then branch
  Block otherwise;  // if_status empty branch, if_word else branch
  std::vector<Block> alternatives;  // select
  std::string label;
  SourcePos pos{};

  friend bool operator==(const Step&, const Step&) = default;
};

struct MechanismDecl {
  std::string id;
  MechanismKind kind = MechanismKind::MessageCell;
  std::optional<Value> init;  // raw_cell, locked_cell, shared_register
  LockMode mode = LockMode::Encapsulated;
  ProcessId side_a = kNoProcess;
  ProcessId side_b = kNoProcess;
  bool last_message = false;
  SourcePos pos{};

  friend bool operator==(const MechanismDecl&, const MechanismDecl&) = default;
};

struct ProcessDecl {
  ProcessId id = 0;
  std::string name;
  Block program;
  SourcePos pos{};

  friend bool operator==(const ProcessDecl&, const ProcessDecl&) = default;
};

enum class MonitorKind : std::uint8_t {
  MutualExclusion,
  SentReceivedOrder,
  TornValue,
  RecipientTag,
  TerminalAssert,
  LostUnread,
};

std::string_view to_string(MonitorKind k);

/// A critical section of one process, delimited by labelled steps: the
/// process is inside after executing `enter` and until it executes `exit`.
struct CriticalMarkers {
  ProcessId process = kNoProcess;
  std::string enter;
  std::string exit;
  friend bool operator==(const CriticalMarkers&, const CriticalMarkers&) =
      default;
};

enum class OrderMode : std::uint8_t { Exact, Latest };

struct MonitorSpec {
  MonitorKind kind = MonitorKind::LostUnread;
  std::string name;  // defaults to "<kind>:<mech>" when empty in a document
  std::string mech;
  std::vector<CriticalMarkers> critical;  // mutual_exclusion
  OrderMode mode = OrderMode::Exact;      // sent_received_order
  std::vector<Value> allowed;             // torn_value
  ProcessId process = kNoProcess;  // torn_value filter, terminal_assert
  std::string var;                 // terminal_assert on a local
  ValueExpr expected{};            // terminal_assert
  SourcePos pos{};

  friend bool operator==(const MonitorSpec&, const MonitorSpec&) = default;
};

struct Scenario {
  std::string name;
  std::string description;
  int word_width = kDefaultWordWidth;
  std::vector<MechanismDecl> mechanisms;
  std::vector<ProcessDecl> processes;
  std::vector<MonitorSpec> monitors;
  std::optional<Bounds> bounds;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

}  // namespace commfn

#endif  // COMMFN_SCENARIO_HPP
