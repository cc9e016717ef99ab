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

// A validated scenario lowered to flat per-process code. Loops are unrolled
// and branches become explicit successor indices, so a program counter is a
// single integer and every step strictly advances it along a DAG.

#ifndef COMMFN_SYSTEM_HPP
#define COMMFN_SYSTEM_HPP

#include <string>
#include <string_view>
#include <vector>

#include "commfn/action.hpp"
#include "commfn/scenario.hpp"
#include "commfn/state.hpp"

namespace commfn {

enum class Op : std::uint8_t {
  Write,
  Read,
  Send,
  Receive,
  Lock,
  Unlock,
  ReadWord,
  WriteWord,
  Check,
  IfStatus,
  Update,
  AssertLocal,
  Local,
  Apply,
  AwaitWord,
  IfWord,
  Select,
};

struct Operand {
  ValueExpr::Kind kind = ValueExpr::Kind::Literal;
  Value literal{};
  int slot = -1;
};

struct WordOperand {
  bool is_var = false;
  Word literal = 0;
  int slot = -1;
};

struct Instr {
  Op op = Op::Local;
  MechanismIndex mech = kNoMechanism;
  int slot = -1;  // bound / inspected variable
  std::uint8_t index = 0;
  Word word = 0;  // await_word / if_word comparand
  Operand value{};
  WordOperand word_value{};
  UpdateFn fn{};
  int next = kTerminatedPc;      // successor; the taken branch for ifs
  int alt_next = kTerminatedPc;  // untaken branch for ifs
  std::vector<int> alternatives;  // select heads
  std::string label;
  SourcePos pos{};
};

struct ProcessCode {
  std::vector<Instr> instrs;
  int entry = kTerminatedPc;
  std::vector<std::string> slot_names;

  int slot_of(std::string_view var) const;
};

/// Monitor with names resolved to indices.
struct CompiledMonitor {
  MonitorSpec spec;
  MechanismIndex mech = kNoMechanism;
  int slot = -1;
  Datum expected{};
};

class System {
 public:
  /// Validates and lowers. Throws ValidationError listing every problem.
  static System compile(Scenario scenario);

  const Scenario& scenario() const { return scenario_; }
  const std::string& name() const { return scenario_.name; }
  int word_width() const { return scenario_.word_width; }
  int process_count() const { return static_cast<int>(code_.size()); }
  int mechanism_count() const {
    return static_cast<int>(scenario_.mechanisms.size());
  }
  Bounds bounds() const { return scenario_.bounds.value_or(Bounds{}); }

  const ProcessCode& code(ProcessId p) const {
    return code_[static_cast<std::size_t>(p)];
  }
  const Instr& instr(ProcessId p, int pc) const {
    return code(p).instrs[static_cast<std::size_t>(pc)];
  }

  MechanismIndex mechanism_index(std::string_view id) const;
  const std::string& mechanism_id(MechanismIndex m) const {
    return scenario_.mechanisms[static_cast<std::size_t>(m)].id;
  }
  const std::string& process_name(ProcessId p) const {
    return scenario_.processes[static_cast<std::size_t>(p)].name;
  }
  /// -1 when no process has that name.
  ProcessId process_by_name(std::string_view name) const;

  const std::vector<CompiledMonitor>& monitors() const { return monitors_; }

  GlobalState initial_state() const;

 private:
  Scenario scenario_;
  std::vector<ProcessCode> code_;
  std::vector<CompiledMonitor> monitors_;
};

}  // namespace commfn

#endif  // COMMFN_SYSTEM_HPP
