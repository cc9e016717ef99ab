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

#include "commfn/kernel.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "commfn/errors.hpp"
#include "commfn/monitors.hpp"

namespace commfn {
namespace {

const Datum& local(const ProcessState& ps, int slot) {
  return ps.locals[static_cast<std::size_t>(slot)];
}

const MechanismState& mech_of(const GlobalState& s, MechanismIndex m) {
  return s.mechanisms[static_cast<std::size_t>(m)];
}

const ProcessState& proc_of(const GlobalState& s, ProcessId p) {
  return s.processes[static_cast<std::size_t>(p)];
}

Datum resolve(const Operand& o, const ProcessState& ps) {
  switch (o.kind) {
    case ValueExpr::Kind::Literal:
      return Datum::of(o.literal);
    case ValueExpr::Kind::Empty:
      return Datum::empty();
    case ValueExpr::Kind::Variable:
      return local(ps, o.slot);
  }
  return {};
}

std::optional<Word> resolve_word(const Instr& in, const ProcessState& ps) {
  if (!in.word_value.is_var) return in.word_value.literal;
  const Datum& d = local(ps, in.word_value.slot);
  if (!d.is_value()) return std::nullopt;
  return d.value[in.index];
}

ActionKind action_kind(Op op) {
  switch (op) {
    case Op::Write:
      return ActionKind::Write;
    case Op::Read:
      return ActionKind::Read;
    case Op::Send:
      return ActionKind::Send;
    case Op::Receive:
      return ActionKind::Receive;
    case Op::Lock:
      return ActionKind::Lock;
    case Op::Unlock:
      return ActionKind::Unlock;
    case Op::ReadWord:
    case Op::AwaitWord:
    case Op::IfWord:
      return ActionKind::ReadWord;
    case Op::WriteWord:
      return ActionKind::WriteWord;
    case Op::Check:
    case Op::IfStatus:
      return ActionKind::CheckStatus;
    case Op::Update:
      return ActionKind::Update;
    default:
      return ActionKind::LocalStep;
  }
}

/// Label for the instruction, or nullopt when its operands cannot be
/// evaluated (a fault).
std::optional<ActionLabel> label_for(const Instr& in, const ProcessState& ps) {
  ActionLabel a;
  a.kind = action_kind(in.op);
  switch (in.op) {
    case Op::Write:
    case Op::Send:
      a.value = resolve(in.value, ps);
      if (a.value.tag == Datum::Tag::Unset ||
          a.value.tag == Datum::Tag::Status) {
        return std::nullopt;
      }
      break;
    case Op::ReadWord:
    case Op::AwaitWord:
    case Op::IfWord:
      a.index = in.index;
      break;
    case Op::WriteWord: {
      a.index = in.index;
      auto w = resolve_word(in, ps);
      if (!w) return std::nullopt;
      a.word = *w;
      break;
    }
    case Op::Update:
      a.fn = in.fn;
      break;
    case Op::Apply:
      if (!local(ps, in.slot).is_value()) return std::nullopt;
      break;
    default:
      break;
  }
  return a;
}

Word word_at(const MechanismState& m, int index) {
  if (const auto* c = std::get_if<RawCell>(&m)) return c->words[index];
  if (const auto* c = std::get_if<LockedCell>(&m)) return c->words[index];
  return 0;
}

bool is_local(Op op) {
  return op == Op::Local || op == Op::Apply || op == Op::AssertLocal;
}

/// Instruction indices a process currently offers: its pc, or the heads of
/// a select.
std::vector<int> offers(const System& sys, const GlobalState& s, ProcessId p) {
  const ProcessState& ps = proc_of(s, p);
  if (ps.terminated()) return {};
  const Instr& in = sys.instr(p, ps.pc);
  if (in.op == Op::Select) return in.alternatives;
  return {ps.pc};
}

/// Whether a single-process instruction is enabled, given its label.
bool single_enabled(const Instr& in, const GlobalState& s, ProcessId p,
                    const ActionLabel& a) {
  if (is_local(in.op)) return true;
  const MechanismState& m = mech_of(s, in.mech);
  if (!is_enabled(m, p, a)) return false;
  if (in.op == Op::AwaitWord) return word_at(m, in.index) == in.word;
  return true;
}

int find_offer(const System& sys, const GlobalState& s, ProcessId p,
               ActionKind kind, MechanismIndex mech) {
  for (int pc : offers(sys, s, p)) {
    const Instr& in = sys.instr(p, pc);
    if (action_kind(in.op) == kind && in.mech == mech) return pc;
  }
  return -1;
}

bool takes_full_branch(const MechanismState& m, ProcessId p, Status st) {
  if (const auto* d = std::get_if<DuplexChannel>(&m)) {
    return st == full_for(*d, p);
  }
  return st == Status::Full;
}

}  // namespace

std::vector<Choice> enabled_actions(const System& sys,
                                    const GlobalState& s) {
  std::vector<Choice> out;
  for (ProcessId p = 0; p < sys.process_count(); ++p) {
    const ProcessState& ps = proc_of(s, p);
    for (int pc : offers(sys, s, p)) {
      const Instr& in = sys.instr(p, pc);
      if (in.op == Op::Receive) continue;  // paired from the sender
      auto label = label_for(in, ps);
      if (!label) continue;
      const MechanismIndex mech = is_local(in.op) ? kNoMechanism : in.mech;
      if (in.op == Op::Send) {
        for (ProcessId q = 0; q < sys.process_count(); ++q) {
          if (q == p) continue;
          if (find_offer(sys, s, q, ActionKind::Receive, in.mech) >= 0) {
            out.push_back(Choice{p, *label, mech, q});
          }
        }
        continue;
      }
      if (single_enabled(in, s, p, *label)) {
        out.push_back(Choice{p, *label, mech, kNoProcess});
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

StepOutcome advance_unchecked(const System& sys, const GlobalState& s,
                              const Choice& c) {
  StepOutcome out{s, {}};
  GlobalState& next = out.state;
  const ProcessId p = c.process;
  const int pc = find_offer(sys, s, p, c.action.kind, c.mech);
  if (pc < 0) throw std::invalid_argument("no instruction offers the choice");
  const Instr& in = sys.instr(p, pc);
  ProcessState& ps = next.processes[static_cast<std::size_t>(p)];
  StepEvent ev{c, pc, -1, {}};

  if (!is_local(in.op) && in.op != Op::Send) {
    MechanismEffect eff = apply_action(mech_of(s, c.mech), p, c.action);
    next.mechanisms[static_cast<std::size_t>(c.mech)] = std::move(eff.next);
    ev.observed = eff.observed;
  }

  int next_pc = in.next;
  switch (in.op) {
    case Op::Read:
    case Op::Check:
      ps.locals[static_cast<std::size_t>(in.slot)] = ev.observed;
      break;
    case Op::ReadWord: {
      Datum& d = ps.locals[static_cast<std::size_t>(in.slot)];
      if (!d.is_value()) d = Datum::of(Value::zero(sys.word_width()));
      d.value[in.index] = ev.observed.value[0];
      break;
    }
    case Op::IfWord:
      if (ev.observed.value[0] != in.word) next_pc = in.alt_next;
      break;
    case Op::IfStatus:
      if (!takes_full_branch(mech_of(s, c.mech), p, ev.observed.status)) {
        next_pc = in.alt_next;
      }
      break;
    case Op::Local:
      ps.locals[static_cast<std::size_t>(in.slot)] = resolve(in.value, ps);
      break;
    case Op::Apply: {
      Datum& d = ps.locals[static_cast<std::size_t>(in.slot)];
      d.value = in.fn.apply(d.value);
      break;
    }
    case Op::Send: {
      const int qpc = find_offer(sys, s, c.partner, ActionKind::Receive, c.mech);
      if (qpc < 0) throw std::invalid_argument("partner is not receiving");
      const Instr& qin = sys.instr(c.partner, qpc);
      ProcessState& qs = next.processes[static_cast<std::size_t>(c.partner)];
      qs.locals[static_cast<std::size_t>(qin.slot)] = c.action.value;
      qs.pc = static_cast<std::int16_t>(qin.next);
      ev.partner_pc = qpc;
      ev.observed = c.action.value;
      break;
    }
    default:
      break;
  }
  ps.pc = static_cast<std::int16_t>(next_pc);
  observe_step(sys, s, ev, next, out.hits);
  return out;
}

StepOutcome advance(const System& sys, const GlobalState& s, const Choice& c) {
  const auto enabled = enabled_actions(sys, s);
  if (!std::binary_search(enabled.begin(), enabled.end(), c)) {
    throw std::invalid_argument("choice is not enabled: P" +
                                std::to_string(c.process) + " " +
                                to_string(c.action));
  }
  return advance_unchecked(sys, s, c);
}

GlobalState step(const System& sys, const GlobalState& s, const Choice& c) {
  return advance(sys, s, c).state;
}

std::vector<ProcessId> faulted_processes(const System& sys,
                                         const GlobalState& s) {
  std::vector<ProcessId> out;
  for (ProcessId p = 0; p < sys.process_count(); ++p) {
    const ProcessState& ps = proc_of(s, p);
    bool faulted = false;
    for (int pc : offers(sys, s, p)) {
      const Instr& in = sys.instr(p, pc);
      auto label = label_for(in, ps);
      if (!label) {
        faulted = true;
      } else if (in.op == Op::Write && label->value.is_empty() &&
                 kind_of(mech_of(s, in.mech)) != MechanismKind::MessageCell) {
        faulted = true;
      }
    }
    if (faulted) out.push_back(p);
  }
  return out;
}

std::vector<ViolationClass> state_violations(const System& sys,
                                             const GlobalState& s) {
  std::vector<ViolationClass> out;
  for (ProcessId p : faulted_processes(sys, s)) {
    out.push_back({ViolationKind::MonitorAssert,
                   "fault:P" + std::to_string(p)});
  }
  if (s.all_terminated()) {
    auto terminal = terminal_violations(sys, s);
    out.insert(out.end(), terminal.begin(), terminal.end());
  } else if (enabled_actions(sys, s).empty()) {
    out.push_back({ViolationKind::Deadlock, {}});
  }
  return out;
}

ReplayRecord replay_recorded(const System& sys, const Trace& trace) {
  ReplayRecord rec;
  GlobalState s = sys.initial_state();
  for (std::size_t k = 0; k < trace.size(); ++k) {
    const auto enabled = enabled_actions(sys, s);
    if (!std::binary_search(enabled.begin(), enabled.end(), trace[k])) {
      throw NotEnabledAtStep(k, "P" + std::to_string(trace[k].process) + " " +
                                    to_string(trace[k].action));
    }
    StepOutcome o = advance_unchecked(sys, s, trace[k]);
    s = std::move(o.state);
    rec.states.push_back(s);
    rec.hits.push_back(std::move(o.hits));
  }
  rec.final_violations = state_violations(sys, s);
  rec.final_state = std::move(s);
  return rec;
}

GlobalState replay(const System& sys, const Trace& trace) {
  return replay_recorded(sys, trace).final_state;
}

bool reproduces(const System& sys, const Trace& trace,
                const ViolationClass& v) {
  ReplayRecord rec = replay_recorded(sys, trace);
  auto has = [&](const std::vector<ViolationClass>& list) {
    return std::find(list.begin(), list.end(), v) != list.end();
  };
  if (has(rec.final_violations)) return true;
  return !rec.hits.empty() && has(rec.hits.back());
}

}  // namespace commfn
