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

#include "commfn/mechanism.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace commfn {
namespace {

constexpr std::array<std::pair<MechanismKind, std::string_view>, 8> kKinds{{
    {MechanismKind::RawCell, "raw_cell"},
    {MechanismKind::LockedCell, "locked_cell"},
    {MechanismKind::MessageCell, "message_cell"},
    {MechanismKind::StatusChannel, "status_channel"},
    {MechanismKind::DuplexChannel, "duplex_channel"},
    {MechanismKind::LastMessageChannel, "last_message_channel"},
    {MechanismKind::SharedRegister, "shared_register"},
    {MechanismKind::DirectChannel, "direct_channel"},
}};

Datum word_datum(Word w) {
  Value v = Value::zero(1);
  v[0] = w;
  return Datum::of(v);
}

// Guards, one overload per mechanism.

bool guard(const RawCell& c, ProcessId, const ActionLabel& a) {
  return (a.kind == ActionKind::ReadWord || a.kind == ActionKind::WriteWord) &&
         a.index < c.words.width;
}

bool guard(const LockedCell& c, ProcessId p, const ActionLabel& a) {
  switch (a.kind) {
    case ActionKind::Lock:
      return c.owner == kNoProcess;
    case ActionKind::Unlock:
      return c.owner == p;
    case ActionKind::ReadWord:
    case ActionKind::WriteWord:
      if (a.index >= c.words.width) return false;
      return c.mode == LockMode::Undisciplined || c.owner == p;
    default:
      return false;
  }
}

bool guard(const MessageCell&, ProcessId, const ActionLabel& a) {
  switch (a.kind) {
    case ActionKind::Read:
      return true;
    case ActionKind::Write:
      return a.value.is_value() || a.value.is_empty();
    default:
      return false;
  }
}

bool guard(const StatusChannel& c, ProcessId, const ActionLabel& a) {
  switch (a.kind) {
    case ActionKind::Write:
      return c.status == Status::Empty && a.value.is_value();
    case ActionKind::Read:
      return c.status == Status::Full;
    case ActionKind::CheckStatus:
      return true;
    default:
      return false;
  }
}

bool guard(const DuplexChannel& d, ProcessId p, const ActionLabel& a) {
  if (p != d.side_a && p != d.side_b) return false;
  switch (a.kind) {
    case ActionKind::Write:
      if (!a.value.is_value()) return false;
      if (d.last_message) return d.status != full_for(d, p);
      return d.status == Status::Empty;
    case ActionKind::Read:
      return d.status == full_for(d, p);
    case ActionKind::CheckStatus:
      return true;
    default:
      return false;
  }
}

bool guard(const LastMessageChannel& c, ProcessId, const ActionLabel& a) {
  switch (a.kind) {
    case ActionKind::Write:
      return a.value.is_value();
    case ActionKind::Read:
      return c.status == Status::Full;
    case ActionKind::CheckStatus:
      return true;
    default:
      return false;
  }
}

bool guard(const SharedRegister& r, ProcessId p, const ActionLabel& a) {
  const bool free_or_mine = r.owner == kNoProcess || r.owner == p;
  switch (a.kind) {
    case ActionKind::Lock:
      return r.owner == kNoProcess;
    case ActionKind::Unlock:
      return r.owner == p;
    case ActionKind::Read:
    case ActionKind::Update:
      return free_or_mine;
    case ActionKind::Write:
      return free_or_mine && a.value.is_value();
    default:
      return false;
  }
}

bool guard(const DirectChannel&, ProcessId, const ActionLabel&) {
  return false;
}

// Transitions. Guards have already been checked.

MechanismEffect effect(RawCell c, ProcessId, const ActionLabel& a) {
  if (a.kind == ActionKind::ReadWord) {
    return {c, word_datum(c.words[a.index])};
  }
  c.words[a.index] = a.word;
  return {c, {}};
}

MechanismEffect effect(LockedCell c, ProcessId p, const ActionLabel& a) {
  switch (a.kind) {
    case ActionKind::Lock:
      c.owner = p;
      return {c, {}};
    case ActionKind::Unlock:
      c.owner = kNoProcess;
      return {c, {}};
    case ActionKind::ReadWord:
      return {c, word_datum(c.words[a.index])};
    default:
      c.words[a.index] = a.word;
      return {c, {}};
  }
}

MechanismEffect effect(MessageCell c, ProcessId, const ActionLabel& a) {
  if (a.kind == ActionKind::Read) return {c, c.content};
  c.content = a.value;
  return {c, {}};
}

MechanismEffect effect(StatusChannel c, ProcessId, const ActionLabel& a) {
  switch (a.kind) {
    case ActionKind::Write:
      c.status = Status::Full;
      c.content = a.value;
      return {c, {}};
    case ActionKind::Read: {
      Datum got = c.content;
      c.status = Status::Empty;
      c.content = Datum::empty();
      return {c, got};
    }
    default:
      return {c, Datum::of(c.status)};
  }
}

MechanismEffect effect(DuplexChannel d, ProcessId p, const ActionLabel& a) {
  switch (a.kind) {
    case ActionKind::Write:
      d.status = p == d.side_a ? Status::FullForB : Status::FullForA;
      d.content = a.value;
      return {d, {}};
    case ActionKind::Read: {
      Datum got = d.content;
      d.status = Status::Empty;
      d.content = Datum::empty();
      return {d, got};
    }
    default:
      return {d, Datum::of(d.status)};
  }
}

MechanismEffect effect(LastMessageChannel c, ProcessId,
                       const ActionLabel& a) {
  switch (a.kind) {
    case ActionKind::Write:
      c.status = Status::Full;
      c.content = a.value;
      return {c, {}};
    case ActionKind::Read: {
      Datum got = c.content;
      c.status = Status::Empty;
      c.content = Datum::empty();
      return {c, got};
    }
    default:
      return {c, Datum::of(c.status)};
  }
}

MechanismEffect effect(SharedRegister r, ProcessId p, const ActionLabel& a) {
  switch (a.kind) {
    case ActionKind::Lock:
      r.owner = p;
      return {r, {}};
    case ActionKind::Unlock:
      r.owner = kNoProcess;
      return {r, {}};
    case ActionKind::Read:
      return {r, Datum::of(r.content)};
    case ActionKind::Update:
      r.content = a.fn.apply(r.content);
      return {r, {}};
    default:
      r.content = a.value.value;
      return {r, {}};
  }
}

MechanismEffect effect(DirectChannel c, ProcessId, const ActionLabel&) {
  return {c, {}};
}

std::string owner_string(ProcessId p) {
  return p == kNoProcess ? "none" : "P" + std::to_string(p);
}

}  // namespace

std::string_view to_string(MechanismKind k) {
  for (const auto& [kind, name] : kKinds) {
    if (kind == k) return name;
  }
  return "?";
}

std::optional<MechanismKind> parse_mechanism_kind(std::string_view s) {
  for (const auto& [kind, name] : kKinds) {
    if (name == s) return kind;
  }
  return std::nullopt;
}

std::string_view to_string(LockMode m) {
  return m == LockMode::Encapsulated ? "encapsulated" : "undisciplined";
}

std::optional<LockMode> parse_lock_mode(std::string_view s) {
  if (s == "encapsulated") return LockMode::Encapsulated;
  if (s == "undisciplined") return LockMode::Undisciplined;
  return std::nullopt;
}

MechanismKind kind_of(const MechanismState& m) {
  return static_cast<MechanismKind>(m.index());
}

Status full_for(const DuplexChannel& d, ProcessId p) {
  return p == d.side_a ? Status::FullForA : Status::FullForB;
}

bool is_enabled(const MechanismState& m, ProcessId p, const ActionLabel& a) {
  return std::visit([&](const auto& s) { return guard(s, p, a); }, m);
}

MechanismEffect apply_action(const MechanismState& m, ProcessId p,
                             const ActionLabel& a) {
  if (!is_enabled(m, p, a)) {
    throw std::logic_error("apply_action: " + to_string(a) + " by P" +
                           std::to_string(p) + " not enabled on " +
                           describe(m));
  }
  return std::visit([&](const auto& s) { return effect(s, p, a); }, m);
}

bool supports(MechanismKind k, ActionKind a) {
  using A = ActionKind;
  switch (k) {
    case MechanismKind::RawCell:
      return a == A::ReadWord || a == A::WriteWord;
    case MechanismKind::LockedCell:
      return a == A::Lock || a == A::Unlock || a == A::ReadWord ||
             a == A::WriteWord;
    case MechanismKind::MessageCell:
      return a == A::Read || a == A::Write;
    case MechanismKind::StatusChannel:
    case MechanismKind::DuplexChannel:
    case MechanismKind::LastMessageChannel:
      return a == A::Read || a == A::Write || a == A::CheckStatus;
    case MechanismKind::SharedRegister:
      return a == A::Lock || a == A::Unlock || a == A::Read || a == A::Write ||
             a == A::Update;
    case MechanismKind::DirectChannel:
      return a == A::Send || a == A::Receive;
  }
  return false;
}

Datum content_of(const MechanismState& m) {
  struct Visitor {
    Datum operator()(const RawCell& c) const { return Datum::of(c.words); }
    Datum operator()(const LockedCell& c) const { return Datum::of(c.words); }
    Datum operator()(const MessageCell& c) const { return c.content; }
    Datum operator()(const StatusChannel& c) const { return c.content; }
    Datum operator()(const DuplexChannel& c) const { return c.content; }
    Datum operator()(const LastMessageChannel& c) const { return c.content; }
    Datum operator()(const SharedRegister& r) const {
      return Datum::of(r.content);
    }
    Datum operator()(const DirectChannel&) const { return Datum::empty(); }
  };
  return std::visit(Visitor{}, m);
}

std::string describe(const MechanismState& m) {
  struct Visitor {
    std::string operator()(const RawCell& c) const {
      return "raw_cell{" + to_string(c.words) + "}";
    }
    std::string operator()(const LockedCell& c) const {
      return "locked_cell{owner=" + owner_string(c.owner) + " " +
             to_string(c.words) + "}";
    }
    std::string operator()(const MessageCell& c) const {
      return "message_cell{" + to_string(c.content) + "}";
    }
    std::string operator()(const StatusChannel& c) const {
      return "status_channel{" + std::string(to_string(c.status)) + " " +
             to_string(c.content) + "}";
    }
    std::string operator()(const DuplexChannel& c) const {
      return "duplex_channel{" + std::string(to_string(c.status)) + " " +
             to_string(c.content) + "}";
    }
    std::string operator()(const LastMessageChannel& c) const {
      return "last_message_channel{" + std::string(to_string(c.status)) +
             " " + to_string(c.content) + "}";
    }
    std::string operator()(const SharedRegister& r) const {
      return "shared_register{owner=" + owner_string(r.owner) + " " +
             to_string(r.content) + "}";
    }
    std::string operator()(const DirectChannel&) const {
      return "direct_channel{}";
    }
  };
  return std::visit(Visitor{}, m);
}

}  // namespace commfn
