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

#include "commfn/action.hpp"

#include <array>
#include <utility>

namespace commfn {
namespace {

constexpr std::array<std::pair<ActionKind, std::string_view>, 11> kNames{{
    {ActionKind::Lock, "lock"},
    {ActionKind::Unlock, "unlock"},
    {ActionKind::ReadWord, "read_word"},
    {ActionKind::WriteWord, "write_word"},
    {ActionKind::Read, "read"},
    {ActionKind::Write, "write"},
    {ActionKind::CheckStatus, "check"},
    {ActionKind::Send, "send"},
    {ActionKind::Receive, "receive"},
    {ActionKind::Update, "update"},
    {ActionKind::LocalStep, "local"},
}};

}  // namespace

std::string_view to_string(ActionKind k) {
  for (const auto& [kind, name] : kNames) {
    if (kind == k) return name;
  }
  return "?";
}

std::optional<ActionKind> parse_action_kind(std::string_view s) {
  for (const auto& [kind, name] : kNames) {
    if (name == s) return kind;
  }
  return std::nullopt;
}

std::string to_string(const ActionLabel& a) {
  std::string out(to_string(a.kind));
  switch (a.kind) {
    case ActionKind::ReadWord:
      out += "[" + std::to_string(a.index) + "]";
      break;
    case ActionKind::WriteWord:
      out += "[" + std::to_string(a.index) + "]=" + std::to_string(a.word);
      break;
    case ActionKind::Write:
    case ActionKind::Send:
      out += " " + to_string(a.value);
      break;
    case ActionKind::Update:
      out += " " + to_string(a.fn);
      break;
    default:
      break;
  }
  return out;
}

}  // namespace commfn
