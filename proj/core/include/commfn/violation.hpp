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

#ifndef COMMFN_VIOLATION_HPP
#define COMMFN_VIOLATION_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace commfn {

enum class ViolationKind : std::uint8_t {
  Deadlock,
  TornRead,
  LostMessage,
  WrongRecipient,
  MonitorAssert,
};

std::string_view to_string(ViolationKind k);
std::optional<ViolationKind> parse_violation_kind(std::string_view s);

/// A violation kind plus, for MonitorAssert, the monitor name. Other kinds
/// carry an empty name.
struct ViolationClass {
  ViolationKind kind = ViolationKind::Deadlock;
  std::string name;

  friend bool operator==(const ViolationClass&, const ViolationClass&) =
      default;
  friend auto operator<=>(const ViolationClass&, const ViolationClass&) =
      default;
};

/// "Deadlock", "TornRead", ..., "MonitorAssert(name)".
std::string to_string(const ViolationClass& c);
std::optional<ViolationClass> parse_violation_class(std::string_view s);

}  // namespace commfn

#endif  // COMMFN_VIOLATION_HPP
