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

#include <map>
#include <set>
#include <string>
#include <utility>

#include "commfn/loader.hpp"
#include "commfn/state.hpp"

namespace commfn {
namespace {

constexpr int kMaxNesting = 3;
constexpr int kMaxUnrolledSteps = 64;

enum class VarType { Data, Status };

std::optional<ActionKind> action_of(StepKind k) {
  switch (k) {
    case StepKind::Write:
      return ActionKind::Write;
    case StepKind::Read:
      return ActionKind::Read;
    case StepKind::Send:
      return ActionKind::Send;
    case StepKind::Receive:
      return ActionKind::Receive;
    case StepKind::Lock:
      return ActionKind::Lock;
    case StepKind::Unlock:
      return ActionKind::Unlock;
    case StepKind::ReadWord:
    case StepKind::AwaitWord:
    case StepKind::IfWord:
      return ActionKind::ReadWord;
    case StepKind::WriteWord:
      return ActionKind::WriteWord;
    case StepKind::Check:
    case StepKind::IfStatus:
      return ActionKind::CheckStatus;
    case StepKind::Update:
      return ActionKind::Update;
    default:
      return std::nullopt;
  }
}

class Validator {
 public:
  explicit Validator(const Scenario& s) : s_(s) {}

  std::vector<Diagnostic> run() {
    check_header();
    check_mechanisms();
    check_processes();
    check_monitors();
    for (const auto& m : s_.mechanisms) {
      if (!used_mechs_.contains(m.id) && !m.id.empty()) {
        error(m.pos, "mechanism '" + m.id + "' is not used by any process");
      }
    }
    return std::move(out_);
  }

 private:
  struct ProcessScope {
    ProcessId id;
    std::map<std::string, VarType> types;
    std::set<std::string> labels;
  };

  void error(SourcePos pos, std::string message) {
    out_.push_back({pos, std::move(message)});
  }

  const MechanismDecl* mech(const std::string& id) const {
    for (const auto& m : s_.mechanisms) {
      if (m.id == id) return &m;
    }
    return nullptr;
  }

  bool process_exists(ProcessId p) const {
    return p >= 0 && p < static_cast<int>(s_.processes.size());
  }

  void check_value(SourcePos pos, const Value& v, const std::string& what) {
    if (v.width != s_.word_width) {
      error(pos, what + " has " + std::to_string(v.width) +
                     " words but word_width is " +
                     std::to_string(s_.word_width));
    }
    for (int i = 0; i < v.width; ++i) {
      if (v[i] >= kWordDomain) {
        error(pos, what + " word " + std::to_string(v[i]) +
                       " is outside 0.." + std::to_string(kWordDomain - 1));
      }
    }
  }

  void check_header() {
    if (s_.name.empty()) error({}, "scenario name is empty");
    if (s_.word_width < 1 || s_.word_width > kMaxWordWidth) {
      error({}, "word_width must be in 1.." + std::to_string(kMaxWordWidth));
    }
    if (s_.bounds &&
        (s_.bounds->max_depth <= 0 || s_.bounds->max_states <= 0)) {
      error({}, "bounds must be positive");
    }
  }

  void check_mechanisms() {
    std::set<std::string> seen;
    for (const auto& m : s_.mechanisms) {
      if (m.id.empty()) error(m.pos, "mechanism id is empty");
      if (!seen.insert(m.id).second) {
        error(m.pos, "duplicate mechanism id '" + m.id + "'");
      }
      if (m.init) {
        const bool has_words = m.kind == MechanismKind::RawCell ||
                               m.kind == MechanismKind::LockedCell ||
                               m.kind == MechanismKind::SharedRegister;
        if (!has_words) {
          error(m.pos, "mechanism '" + m.id + "' does not take init");
        } else {
          check_value(m.pos, *m.init, "init of '" + m.id + "'");
        }
      }
      if (m.kind == MechanismKind::DuplexChannel) {
        if (!process_exists(m.side_a) || !process_exists(m.side_b)) {
          error(m.pos, "duplex '" + m.id +
                           "' sides must name declared processes");
        } else if (m.side_a == m.side_b) {
          error(m.pos, "duplex '" + m.id + "' has side_a equal to side_b (" +
                           std::to_string(m.side_a) + ")");
        }
      }
    }
  }

  void check_processes() {
    std::set<std::string> names;
    for (std::size_t i = 0; i < s_.processes.size(); ++i) {
      const auto& p = s_.processes[i];
      if (p.id != static_cast<int>(i)) {
        error(p.pos, "process ids must be dense 0..P-1; expected " +
                         std::to_string(i) + ", got " + std::to_string(p.id));
      }
      if (!p.name.empty() && !names.insert(p.name).second) {
        error(p.pos, "duplicate process name '" + p.name + "'");
      }
      ProcessScope scope{static_cast<ProcessId>(i), {}, {}};
      std::set<std::string> bound;
      check_block(scope, p.program, 1, bound);
      if (scope.types.size() > static_cast<std::size_t>(kMaxLocals)) {
        error(p.pos, "process " + std::to_string(i) + " uses " +
                         std::to_string(scope.types.size()) +
                         " variables; at most " + std::to_string(kMaxLocals) +
                         " allowed");
      }
      int size = unrolled_size(p.program);
      if (size > kMaxUnrolledSteps) {
        error(p.pos, "process " + std::to_string(i) + " unrolls to " +
                         std::to_string(size) + " steps; at most " +
                         std::to_string(kMaxUnrolledSteps) + " allowed");
      }
      scopes_.push_back(std::move(scope));
    }
  }

  void bind(ProcessScope& scope, const Step& st, const std::string& var,
            VarType type, std::set<std::string>& bound) {
    auto [it, inserted] = scope.types.emplace(var, type);
    if (!inserted && it->second != type) {
      error(st.pos, "variable '" + var +
                        "' holds both a status and a message value");
    }
    bound.insert(var);
  }

  void use(const ProcessScope& scope, const Step& st, const std::string& var,
           const std::set<std::string>& bound, bool need_data) {
    if (!bound.contains(var)) {
      error(st.pos, "variable '" + var + "' may be used before it is bound");
      return;
    }
    auto it = scope.types.find(var);
    if (need_data && it != scope.types.end() &&
        it->second == VarType::Status) {
      error(st.pos, "variable '" + var + "' holds a status, not a value");
    }
  }

  void check_value_expr(const ProcessScope& scope, const Step& st,
                        const ValueExpr& e,
                        const std::set<std::string>& bound) {
    if (e.kind == ValueExpr::Kind::Literal) {
      check_value(st.pos, e.literal, "literal");
    } else if (e.kind == ValueExpr::Kind::Variable) {
      use(scope, st, e.var, bound, true);
    }
  }

  void check_mech_step(const ProcessScope& scope, const Step& st) {
    auto action = action_of(st.kind);
    if (!action) return;
    used_mechs_.insert(st.mech);
    const MechanismDecl* m = mech(st.mech);
    if (m == nullptr) {
      error(st.pos, "undeclared mechanism '" + st.mech + "'");
      return;
    }
    if (!supports(m->kind, *action)) {
      error(st.pos, "'" + std::string(to_string(st.kind)) +
                        "' is not supported by " +
                        std::string(to_string(m->kind)) + " '" + m->id + "'");
    }
    if (m->kind == MechanismKind::DuplexChannel && scope.id != m->side_a &&
        scope.id != m->side_b) {
      error(st.pos, "process " + std::to_string(scope.id) +
                        " is not a side of duplex '" + m->id + "'");
    }
    if (*action == ActionKind::ReadWord || *action == ActionKind::WriteWord) {
      if (st.index < 0 || st.index >= s_.word_width) {
        error(st.pos, "word index " + std::to_string(st.index) +
                          " out of range for word_width " +
                          std::to_string(s_.word_width));
      }
    }
  }

  void check_word_literal(const Step& st, Word w) {
    if (w >= kWordDomain) {
      error(st.pos, "word " + std::to_string(w) + " is outside 0.." +
                        std::to_string(kWordDomain - 1));
    }
  }

  void check_block(ProcessScope& scope, const Block& block, int depth,
                   std::set<std::string>& bound) {
    for (const auto& st : block) check_step(scope, st, depth, bound);
  }

  void check_step(ProcessScope& scope, const Step& st, int depth,
                  std::set<std::string>& bound) {
    if (!st.label.empty() && !scope.labels.insert(st.label).second) {
      error(st.pos, "duplicate label '" + st.label + "'");
    }
    check_mech_step(scope, st);
    switch (st.kind) {
      case StepKind::Write:
      case StepKind::Send:
        check_value_expr(scope, st, st.value, bound);
        break;
      case StepKind::Read:
      case StepKind::Receive:
      case StepKind::ReadWord:
        bind(scope, st, st.var, VarType::Data, bound);
        break;
      case StepKind::Check:
        bind(scope, st, st.var, VarType::Status, bound);
        break;
      case StepKind::WriteWord:
        if (st.word.is_var) {
          use(scope, st, st.word.var, bound, true);
        } else {
          check_word_literal(st, st.word.literal);
        }
        break;
      case StepKind::AwaitWord:
        check_word_literal(st, st.word.literal);
        break;
      case StepKind::Local:
        check_value_expr(scope, st, st.value, bound);
        bind(scope, st, st.var, VarType::Data, bound);
        break;
      case StepKind::Apply:
        use(scope, st, st.var, bound, true);
        break;
      case StepKind::AssertLocal:
        use(scope, st, st.var, bound, false);
        if (st.value.kind == ValueExpr::Kind::Variable) {
          error(st.pos, "assert_local compares against a literal or empty");
        } else if (st.value.kind == ValueExpr::Kind::Literal) {
          check_value(st.pos, st.value.literal, "literal");
        }
        break;
      case StepKind::Loop: {
        if (st.count < 0) error(st.pos, "loop count must be non-negative");
        check_nesting(st, depth);
        // Bindings made inside the body only count if the body runs.
        std::set<std::string> inner = bound;
        check_block(scope, st.body, depth + 1, inner);
        if (st.count > 0) bound = std::move(inner);
        break;
      }
      case StepKind::IfStatus:
      case StepKind::IfWord: {
        if (st.kind == StepKind::IfWord) check_word_literal(st, st.word.literal);
        check_nesting(st, depth);
        std::set<std::string> a = bound;
        std::set<std::string> b = bound;
        check_block(scope, st.body, depth + 1, a);
        check_block(scope, st.otherwise, depth + 1, b);
        std::set<std::string> both;
        for (const auto& v : a) {
          if (b.contains(v)) both.insert(v);
        }
        bound = std::move(both);
        break;
      }
      case StepKind::Select:
        check_select(scope, st, depth, bound);
        break;
      default:
        break;
    }
  }

  void check_nesting(const Step& st, int depth) {
    if (depth > kMaxNesting) {
      error(st.pos, "nesting deeper than " + std::to_string(kMaxNesting));
    }
  }

  void check_select(ProcessScope& scope, const Step& st, int depth,
                    std::set<std::string>& bound) {
    check_nesting(st, depth);
    if (st.alternatives.empty()) {
      error(st.pos, "select needs at least one alternative");
      return;
    }
    std::set<std::pair<ActionKind, std::string>> heads;
    std::optional<std::set<std::string>> common;
    for (const auto& alt : st.alternatives) {
      if (alt.empty()) {
        error(st.pos, "select alternative is empty");
        continue;
      }
      const Step& head = alt.front();
      auto action = action_of(head.kind);
      if (!action || head.kind == StepKind::IfStatus ||
          head.kind == StepKind::IfWord) {
        error(head.pos, "select alternative must start with a mechanism "
                        "action, not '" +
                            std::string(to_string(head.kind)) + "'");
      } else if (!heads.emplace(*action, head.mech).second) {
        error(head.pos, "select alternatives share the same first action '" +
                            std::string(to_string(head.kind)) + " " +
                            head.mech + "'");
      }
      std::set<std::string> inner = bound;
      check_block(scope, alt, depth + 1, inner);
      if (!common) {
        common = std::move(inner);
      } else {
        std::set<std::string> both;
        for (const auto& v : *common) {
          if (inner.contains(v)) both.insert(v);
        }
        common = std::move(both);
      }
    }
    if (common) bound = std::move(*common);
  }

  const ProcessScope* scope_of(ProcessId p) const {
    for (const auto& s : scopes_) {
      if (s.id == p) return &s;
    }
    return nullptr;
  }

  void check_monitors() {
    std::set<std::string> names;
    for (const auto& m : s_.monitors) {
      const std::string name =
          m.name.empty() ? std::string(to_string(m.kind)) + ":" + m.mech
                         : m.name;
      if (!names.insert(name).second) {
        error(m.pos, "duplicate monitor name '" + name + "'");
      }
      const MechanismDecl* target = m.mech.empty() ? nullptr : mech(m.mech);
      if (!m.mech.empty() && target == nullptr) {
        error(m.pos, "monitor refers to undeclared mechanism '" + m.mech + "'");
      }
      auto need_mech = [&] {
        if (m.mech.empty()) {
          error(m.pos, std::string(to_string(m.kind)) + " needs a mech");
        }
      };
      auto need_kind = [&](std::initializer_list<MechanismKind> kinds) {
        if (target == nullptr) return;
        for (auto k : kinds) {
          if (target->kind == k) return;
        }
        error(m.pos, std::string(to_string(m.kind)) + " does not apply to " +
                         std::string(to_string(target->kind)));
      };
      switch (m.kind) {
        case MonitorKind::MutualExclusion:
          need_mech();
          if (m.critical.empty()) {
            error(m.pos, "mutual_exclusion needs critical markers");
          }
          for (const auto& c : m.critical) {
            const ProcessScope* scope = scope_of(c.process);
            if (scope == nullptr) {
              error(m.pos, "critical markers name unknown process " +
                               std::to_string(c.process));
              continue;
            }
            for (const auto& label : {c.enter, c.exit}) {
              if (!scope->labels.contains(label)) {
                error(m.pos, "process " + std::to_string(c.process) +
                                 " has no step labelled '" + label + "'");
              }
            }
          }
          break;
        case MonitorKind::SentReceivedOrder:
          need_mech();
          need_kind({MechanismKind::MessageCell, MechanismKind::StatusChannel,
                     MechanismKind::DuplexChannel,
                     MechanismKind::LastMessageChannel,
                     MechanismKind::DirectChannel});
          break;
        case MonitorKind::TornValue:
          need_mech();
          need_kind({MechanismKind::RawCell, MechanismKind::LockedCell,
                     MechanismKind::MessageCell,
                     MechanismKind::SharedRegister});
          if (m.allowed.empty()) error(m.pos, "torn_value needs allowed values");
          for (const auto& v : m.allowed) check_value(m.pos, v, "allowed value");
          if (m.process != kNoProcess && !process_exists(m.process)) {
            error(m.pos, "torn_value names unknown process " +
                             std::to_string(m.process));
          }
          break;
        case MonitorKind::RecipientTag:
          need_mech();
          need_kind({MechanismKind::DuplexChannel});
          break;
        case MonitorKind::LostUnread:
          need_mech();
          need_kind({MechanismKind::MessageCell, MechanismKind::StatusChannel,
                     MechanismKind::DuplexChannel,
                     MechanismKind::LastMessageChannel,
                     MechanismKind::SharedRegister});
          break;
        case MonitorKind::TerminalAssert:
          check_terminal_assert(m);
          break;
      }
    }
  }

  void check_terminal_assert(const MonitorSpec& m) {
    const bool on_local = m.process != kNoProcess || !m.var.empty();
    if (on_local == !m.mech.empty()) {
      error(m.pos, "terminal_assert takes either process+var or mech");
      return;
    }
    if (on_local) {
      const ProcessScope* scope = scope_of(m.process);
      if (scope == nullptr) {
        error(m.pos, "terminal_assert names unknown process " +
                         std::to_string(m.process));
      } else if (!scope->types.contains(m.var)) {
        error(m.pos, "process " + std::to_string(m.process) +
                         " has no variable '" + m.var + "'");
      }
    } else {
      const MechanismDecl* target = mech(m.mech);
      if (target != nullptr && target->kind == MechanismKind::DirectChannel) {
        error(m.pos, "terminal_assert cannot inspect a direct_channel");
      }
    }
    if (m.expected.kind == ValueExpr::Kind::Literal) {
      check_value(m.pos, m.expected.literal, "expected value");
    } else if (m.expected.kind == ValueExpr::Kind::Variable) {
      error(m.pos, "expected must be a literal or empty");
    }
  }

  const Scenario& s_;
  std::vector<Diagnostic> out_;
  std::vector<ProcessScope> scopes_;
  std::set<std::string> used_mechs_;
};

}  // namespace

std::vector<Diagnostic> validate(const Scenario& scenario) {
  return Validator(scenario).run();
}

}  // namespace commfn
