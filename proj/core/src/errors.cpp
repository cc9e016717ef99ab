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

#include "commfn/errors.hpp"

#include <array>
#include <utility>

#include "commfn/violation.hpp"

namespace commfn {
namespace {

std::string join(const std::vector<Diagnostic>& diagnostics) {
  std::string out;
  for (const auto& d : diagnostics) {
    if (!out.empty()) out += '\n';
    out += to_string(d);
  }
  return out;
}

constexpr std::array<std::pair<ViolationKind, std::string_view>, 5> kKinds{{
    {ViolationKind::Deadlock, "Deadlock"},
    {ViolationKind::TornRead, "TornRead"},
    {ViolationKind::LostMessage, "LostMessage"},
    {ViolationKind::WrongRecipient, "WrongRecipient"},
    {ViolationKind::MonitorAssert, "MonitorAssert"},
}};

}  // namespace

std::string to_string(const SourcePos& pos) {
  if (pos.line == 0) return "<unknown>";
  return std::to_string(pos.line) + ":" + std::to_string(pos.column);
}

std::string to_string(const Diagnostic& d) {
  return to_string(d.pos) + ": " + d.message;
}

ParseError::ParseError(SourcePos pos, const std::string& message)
    : std::runtime_error(to_string(pos) + ": " + message), pos_(pos) {}

ValidationError::ValidationError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(join(diagnostics)),
      diagnostics_(std::move(diagnostics)) {}

NotEnabledAtStep::NotEnabledAtStep(std::size_t index, const std::string& detail)
    : std::runtime_error("event " + std::to_string(index) +
                         " is not enabled: " + detail),
      index_(index) {}

std::string_view to_string(ViolationKind k) {
  for (const auto& [kind, name] : kKinds) {
    if (kind == k) return name;
  }
  return "?";
}

std::optional<ViolationKind> parse_violation_kind(std::string_view s) {
  for (const auto& [kind, name] : kKinds) {
    if (name == s) return kind;
  }
  return std::nullopt;
}

std::string to_string(const ViolationClass& c) {
  std::string out(to_string(c.kind));
  if (c.kind == ViolationKind::MonitorAssert) out += "(" + c.name + ")";
  return out;
}

std::optional<ViolationClass> parse_violation_class(std::string_view s) {
  constexpr std::string_view kAssert = "MonitorAssert(";
  if (s.starts_with(kAssert) && s.ends_with(")")) {
    return ViolationClass{
        ViolationKind::MonitorAssert,
        std::string(s.substr(kAssert.size(), s.size() - kAssert.size() - 1))};
  }
  auto kind = parse_violation_kind(s);
  if (!kind || *kind == ViolationKind::MonitorAssert) return std::nullopt;
  return ViolationClass{*kind, {}};
}

}  // namespace commfn
