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

#ifndef COMMFN_STATE_HPP
#define COMMFN_STATE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "commfn/action.hpp"
#include "commfn/mechanism.hpp"
#include "commfn/value.hpp"

namespace commfn {

inline constexpr int kMaxLocals = 4;
inline constexpr std::int16_t kTerminatedPc = -1;

struct ProcessState {
  std::int16_t pc = kTerminatedPc;
  std::array<Datum, kMaxLocals> locals{};

  bool terminated() const { return pc == kTerminatedPc; }

  friend bool operator==(const ProcessState&, const ProcessState&) = default;
};

/// Monitor bookkeeping kept alongside the system state so that two paths
/// reaching the same mechanisms and processes with different histories are
/// not merged. One byte string per monitor.
using GhostState = std::vector<std::vector<std::uint8_t>>;

/// Snapshot of everything the explorer branches over. Plain value; copying
/// is cheap at the sizes involved.
struct GlobalState {
  std::vector<MechanismState> mechanisms;
  std::vector<ProcessState> processes;
  GhostState ghost;

  bool all_terminated() const;

  /// Canonical byte encoding. Equal states encode identically and distinct
  /// states encode differently, so the encoding is usable as an exact key.
  std::string encode() const;

  /// FNV-1a 64 of `encode()`; stable across runs and platforms.
  std::uint64_t hash() const;

  friend bool operator==(const GlobalState&, const GlobalState&) = default;
};

std::uint64_t fnv1a64(const std::string& bytes);

/// "0x" followed by 16 lowercase hex digits.
std::string format_hash(std::uint64_t h);

}  // namespace commfn

#endif  // COMMFN_STATE_HPP
