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

#include "commfn/monitors.hpp"

#include <algorithm>

#include "commfn/system.hpp"

namespace commfn {
namespace {

using Bytes = std::vector<std::uint8_t>;

// Pending-message queue entries are fixed size: tag byte plus the words.
void push_datum(Bytes& q, const Datum& d, int width) {
  q.push_back(static_cast<std::uint8_t>(d.tag));
  for (int i = 0; i < width; ++i) q.push_back(d.value[i]);
}

bool entry_equals(const Bytes& q, std::size_t at, const Datum& d, int width) {
  if (q[at] != static_cast<std::uint8_t>(d.tag)) return false;
  for (int i = 0; i < width; ++i) {
    if (q[at + 1 + static_cast<std::size_t>(i)] != d.value[i]) return false;
  }
  return true;
}

bool is_write(ActionKind k) {
  return k == ActionKind::Write || k == ActionKind::Send;
}

bool is_read(ActionKind k) {
  return k == ActionKind::Read || k == ActionKind::Send;
}

void check_order(const System& sys, const CompiledMonitor& m,
                 const StepEvent& ev, Bytes& q,
                 std::vector<ViolationClass>& hits) {
  const Choice& c = ev.choice;
  const int width = sys.word_width();
  const std::size_t entry = static_cast<std::size_t>(width) + 1;
  if (is_write(c.action.kind)) push_datum(q, c.action.value, width);
  if (!is_read(c.action.kind)) return;
  const Datum& got = ev.observed;
  if (got.is_empty()) return;  // nothing was there to receive
  const bool ok =
      m.spec.mode == OrderMode::Exact
          ? !q.empty() && entry_equals(q, 0, got, width)
          : !q.empty() && entry_equals(q, q.size() - entry, got, width);
  if (!ok) {
    hits.push_back({ViolationKind::LostMessage, {}});
    q.clear();
    return;
  }
  if (m.spec.mode == OrderMode::Exact) {
    q.erase(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(entry));
  } else {
    q.clear();
  }
}

bool allowed(const CompiledMonitor& m, const Datum& d) {
  if (!d.is_value()) return true;
  return std::find(m.spec.allowed.begin(), m.spec.allowed.end(), d.value) !=
         m.spec.allowed.end();
}

void check_torn(const System& sys, const CompiledMonitor& m,
                const StepEvent& ev, const GlobalState& after,
                std::vector<ViolationClass>& hits) {
  const Choice& c = ev.choice;
  if (m.spec.process != kNoProcess && m.spec.process != c.process) return;
  if (c.action.kind == ActionKind::Read) {
    if (!allowed(m, ev.observed)) hits.push_back({ViolationKind::TornRead, {}});
    return;
  }
  if (c.action.kind != ActionKind::ReadWord) return;
  const Instr& in = sys.instr(c.process, ev.pc);
  if (in.op != Op::ReadWord || in.index != sys.word_width() - 1) return;
  const Datum& assembled =
      after.processes[static_cast<std::size_t>(c.process)]
          .locals[static_cast<std::size_t>(in.slot)];
  if (!allowed(m, assembled)) hits.push_back({ViolationKind::TornRead, {}});
}

void check_markers(const System& sys, const CompiledMonitor& m,
                   const StepEvent& ev, Bytes& inside,
                   std::vector<ViolationClass>& hits) {
  bool entered = false;
  auto visit = [&](ProcessId p, int pc) {
    if (p == kNoProcess || pc < 0) return;
    const std::string& label = sys.instr(p, pc).label;
    if (label.empty()) return;
    for (std::size_t i = 0; i < m.spec.critical.size(); ++i) {
      const auto& cm = m.spec.critical[i];
      if (cm.process != p) continue;
      if (cm.enter == label) {
        inside[i] = 1;
        entered = true;
      } else if (cm.exit == label) {
        inside[i] = 0;
      }
    }
  };
  visit(ev.choice.process, ev.pc);
  visit(ev.choice.partner, ev.partner_pc);
  if (!entered) return;
  std::vector<ProcessId> in_cs;
  for (std::size_t i = 0; i < inside.size(); ++i) {
    const ProcessId p = m.spec.critical[i].process;
    if (inside[i] && std::find(in_cs.begin(), in_cs.end(), p) == in_cs.end()) {
      in_cs.push_back(p);
    }
  }
  if (in_cs.size() > 1) {
    hits.push_back({ViolationKind::MonitorAssert, m.spec.name});
  }
}

}  // namespace

GhostState initial_ghost(const System& system) {
  GhostState ghost;
  for (const auto& m : system.monitors()) {
    switch (m.spec.kind) {
      case MonitorKind::MutualExclusion:
        ghost.emplace_back(m.spec.critical.size(), 0);
        break;
      case MonitorKind::RecipientTag:
      case MonitorKind::LostUnread:
        ghost.emplace_back(1, 0);
        break;
      default:
        ghost.emplace_back();
        break;
    }
  }
  return ghost;
}

void observe_step(const System& system, const GlobalState& before,
                  const StepEvent& ev, GlobalState& after,
                  std::vector<ViolationClass>& hits) {
  const Choice& c = ev.choice;
  const auto actor = static_cast<std::uint8_t>(c.process + 1);

  if (ev.pc >= 0) {
    const Instr& in = system.instr(c.process, ev.pc);
    if (in.op == Op::AssertLocal) {
      const Datum& have = before.processes[static_cast<std::size_t>(c.process)]
                              .locals[static_cast<std::size_t>(in.slot)];
      const Datum want = in.value.kind == ValueExpr::Kind::Empty
                             ? Datum::empty()
                             : Datum::of(in.value.literal);
      if (have != want) {
        hits.push_back({ViolationKind::MonitorAssert,
                        "assert_local:P" + std::to_string(c.process) + ":" +
                            system.code(c.process).slot_names[static_cast<
                                std::size_t>(in.slot)]});
      }
    }
  }

  const auto& monitors = system.monitors();
  for (std::size_t i = 0; i < monitors.size(); ++i) {
    const CompiledMonitor& m = monitors[i];
    Bytes& ghost = after.ghost[i];
    if (m.spec.kind == MonitorKind::MutualExclusion) {
      check_markers(system, m, ev, ghost, hits);
      continue;
    }
    if (c.mech != m.mech) continue;
    switch (m.spec.kind) {
      case MonitorKind::SentReceivedOrder:
        check_order(system, m, ev, ghost, hits);
        break;
      case MonitorKind::TornValue:
        check_torn(system, m, ev, after, hits);
        break;
      case MonitorKind::RecipientTag:
        if (c.action.kind == ActionKind::Write) {
          ghost[0] = actor;
        } else if (c.action.kind == ActionKind::Read) {
          if (ghost[0] == actor) {
            hits.push_back({ViolationKind::WrongRecipient, {}});
          }
          ghost[0] = 0;
        }
        break;
      case MonitorKind::LostUnread:
        if (is_write(c.action.kind)) {
          if (ghost[0] != 0) {
            const bool duplex = std::holds_alternative<DuplexChannel>(
                before.mechanisms[static_cast<std::size_t>(m.mech)]);
            if (duplex && ghost[0] != actor) {
              hits.push_back(
                  {ViolationKind::MonitorAssert, m.spec.name + ":incoming"});
            } else {
              hits.push_back({ViolationKind::LostMessage, {}});
            }
          }
          ghost[0] = actor;
        } else if (c.action.kind == ActionKind::Read &&
                   !ev.observed.is_empty()) {
          ghost[0] = 0;
        }
        break;
      default:
        break;
    }
  }
}

std::vector<ViolationClass> terminal_violations(const System& system,
                                                const GlobalState& state) {
  std::vector<ViolationClass> hits;
  const auto& monitors = system.monitors();
  for (std::size_t i = 0; i < monitors.size(); ++i) {
    const CompiledMonitor& m = monitors[i];
    if (m.spec.kind == MonitorKind::SentReceivedOrder &&
        m.spec.mode == OrderMode::Exact && !state.ghost[i].empty()) {
      hits.push_back({ViolationKind::LostMessage, {}});
    }
    if (m.spec.kind != MonitorKind::TerminalAssert) continue;
    Datum have;
    if (m.slot >= 0) {
      have = state.processes[static_cast<std::size_t>(m.spec.process)]
                 .locals[static_cast<std::size_t>(m.slot)];
    } else {
      have = content_of(state.mechanisms[static_cast<std::size_t>(m.mech)]);
    }
    if (have != m.expected) {
      hits.push_back({ViolationKind::MonitorAssert, m.spec.name});
    }
  }
  return hits;
}

}  // namespace commfn
