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

#include "commfn/system.hpp"

#include <algorithm>

#include "commfn/errors.hpp"
#include "commfn/loader.hpp"
#include "commfn/monitors.hpp"

namespace commfn {
namespace {

Op op_of(StepKind k) {
  switch (k) {
    case StepKind::Write:
      return Op::Write;
    case StepKind::Read:
      return Op::Read;
    case StepKind::Send:
      return Op::Send;
    case StepKind::Receive:
      return Op::Receive;
    case StepKind::Lock:
      return Op::Lock;
    case StepKind::Unlock:
      return Op::Unlock;
    case StepKind::ReadWord:
      return Op::ReadWord;
    case StepKind::WriteWord:
      return Op::WriteWord;
    case StepKind::Check:
      return Op::Check;
    case StepKind::IfStatus:
      return Op::IfStatus;
    case StepKind::Update:
      return Op::Update;
    case StepKind::AssertLocal:
      return Op::AssertLocal;
    case StepKind::Local:
      return Op::Local;
    case StepKind::Apply:
      return Op::Apply;
    case StepKind::AwaitWord:
      return Op::AwaitWord;
    case StepKind::IfWord:
      return Op::IfWord;
    case StepKind::Select:
      return Op::Select;
    case StepKind::Loop:
      break;
  }
  return Op::Local;
}

// Lowers one process. Blocks are emitted back to front so each instruction
// knows its successor when it is created; indices are reversed at the end so
// that they follow program order.
class Lowering {
 public:
  Lowering(const System& system, ProcessCode& code)
      : system_(system), code_(code) {}

  void run(const Block& program) {
    collect_slots(program);
    int entry = emit_block(program, kTerminatedPc);
    const int n = static_cast<int>(code_.instrs.size());
    auto flip = [n](int pc) { return pc == kTerminatedPc ? pc : n - 1 - pc; };
    std::reverse(code_.instrs.begin(), code_.instrs.end());
    for (auto& in : code_.instrs) {
      in.next = flip(in.next);
      in.alt_next = flip(in.alt_next);
      for (auto& a : in.alternatives) a = flip(a);
    }
    code_.entry = flip(entry);
  }

 private:
  int slot(const std::string& var) {
    if (var.empty()) return -1;
    auto& names = code_.slot_names;
    auto it = std::find(names.begin(), names.end(), var);
    if (it != names.end()) return static_cast<int>(it - names.begin());
    names.push_back(var);
    return static_cast<int>(names.size()) - 1;
  }

  void collect_slots(const Block& block) {
    for (const auto& st : block) {
      slot(st.var);
      if (st.value.kind == ValueExpr::Kind::Variable) slot(st.value.var);
      if (st.word.is_var) slot(st.word.var);
      collect_slots(st.body);
      collect_slots(st.otherwise);
      for (const auto& alt : st.alternatives) collect_slots(alt);
    }
  }

  Operand operand(const ValueExpr& e) {
    Operand o;
    o.kind = e.kind;
    o.literal = e.literal;
    if (e.kind == ValueExpr::Kind::Variable) o.slot = slot(e.var);
    return o;
  }

  int push(Instr in) {
    code_.instrs.push_back(std::move(in));
    return static_cast<int>(code_.instrs.size()) - 1;
  }

  int emit_block(const Block& block, int cont) {
    int entry = cont;
    for (auto it = block.rbegin(); it != block.rend(); ++it) {
      entry = emit_step(*it, entry);
    }
    return entry;
  }

  int emit_step(const Step& st, int cont) {
    if (st.kind == StepKind::Loop) {
      int entry = cont;
      for (int i = 0; i < st.count; ++i) entry = emit_block(st.body, entry);
      return entry;
    }
    Instr in;
    in.op = op_of(st.kind);
    in.mech = st.mech.empty() ? kNoMechanism
                              : system_.mechanism_index(st.mech);
    in.slot = slot(st.var);
    in.index = static_cast<std::uint8_t>(st.index);
    in.word = st.word.literal;
    in.value = operand(st.value);
    in.word_value = WordOperand{st.word.is_var, st.word.literal,
                                st.word.is_var ? slot(st.word.var) : -1};
    in.fn = st.fn;
    in.label = st.label;
    in.pos = st.pos;
    in.next = cont;
    switch (st.kind) {
      case StepKind::IfStatus:
      case StepKind::IfWord:
        in.next = emit_block(st.body, cont);
        in.alt_next = emit_block(st.otherwise, cont);
        break;
      case StepKind::Select:
        for (const auto& alt : st.alternatives) {
          in.alternatives.push_back(emit_block(alt, cont));
        }
        break;
      default:
        break;
    }
    return push(std::move(in));
  }

  const System& system_;
  ProcessCode& code_;
};

Datum literal_datum(const ValueExpr& e) {
  return e.kind == ValueExpr::Kind::Empty ? Datum::empty()
                                          : Datum::of(e.literal);
}

}  // namespace

int ProcessCode::slot_of(std::string_view var) const {
  auto it = std::find(slot_names.begin(), slot_names.end(), var);
  return it == slot_names.end() ? -1
                                : static_cast<int>(it - slot_names.begin());
}

System System::compile(Scenario scenario) {
  auto problems = validate(scenario);
  if (!problems.empty()) throw ValidationError(std::move(problems));

  System sys;
  sys.scenario_ = std::move(scenario);
  sys.code_.resize(sys.scenario_.processes.size());
  for (std::size_t p = 0; p < sys.code_.size(); ++p) {
    Lowering(sys, sys.code_[p]).run(sys.scenario_.processes[p].program);
  }
  for (const auto& spec : sys.scenario_.monitors) {
    CompiledMonitor m;
    m.spec = spec;
    if (m.spec.name.empty()) {
      m.spec.name = std::string(to_string(spec.kind)) + ":" + spec.mech;
    }
    if (!spec.mech.empty()) m.mech = sys.mechanism_index(spec.mech);
    if (spec.kind == MonitorKind::TerminalAssert && !spec.var.empty()) {
      m.slot = sys.code(spec.process).slot_of(spec.var);
    }
    m.expected = literal_datum(spec.expected);
    sys.monitors_.push_back(std::move(m));
  }
  return sys;
}

MechanismIndex System::mechanism_index(std::string_view id) const {
  for (std::size_t i = 0; i < scenario_.mechanisms.size(); ++i) {
    if (scenario_.mechanisms[i].id == id) return static_cast<MechanismIndex>(i);
  }
  return kNoMechanism;
}

ProcessId System::process_by_name(std::string_view name) const {
  for (std::size_t i = 0; i < scenario_.processes.size(); ++i) {
    if (scenario_.processes[i].name == name) return static_cast<ProcessId>(i);
  }
  return kNoProcess;
}

GlobalState System::initial_state() const {
  GlobalState s;
  const int width = word_width();
  for (const auto& decl : scenario_.mechanisms) {
    const Value init = decl.init.value_or(Value::zero(width));
    switch (decl.kind) {
      case MechanismKind::RawCell:
        s.mechanisms.emplace_back(RawCell{init});
        break;
      case MechanismKind::LockedCell:
        s.mechanisms.emplace_back(LockedCell{kNoProcess, init, decl.mode});
        break;
      case MechanismKind::MessageCell:
        s.mechanisms.emplace_back(MessageCell{});
        break;
      case MechanismKind::StatusChannel:
        s.mechanisms.emplace_back(StatusChannel{});
        break;
      case MechanismKind::DuplexChannel:
        s.mechanisms.emplace_back(DuplexChannel{Status::Empty, Datum::empty(),
                                                decl.side_a, decl.side_b,
                                                decl.last_message});
        break;
      case MechanismKind::LastMessageChannel:
        s.mechanisms.emplace_back(LastMessageChannel{});
        break;
      case MechanismKind::SharedRegister:
        s.mechanisms.emplace_back(SharedRegister{init, kNoProcess});
        break;
      case MechanismKind::DirectChannel:
        s.mechanisms.emplace_back(DirectChannel{});
        break;
    }
  }
  for (const auto& code : code_) {
    ProcessState p;
    p.pc = static_cast<std::int16_t>(code.entry);
    s.processes.push_back(p);
  }
  s.ghost = initial_ghost(*this);
  return s;
}

}  // namespace commfn
