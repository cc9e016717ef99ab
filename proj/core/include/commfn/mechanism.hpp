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

// Guarded state machines for the communication mechanisms.
//
// Every mechanism is a plain value. `is_enabled` is the guard for one action
// by one process and `apply_action` the transition; disabled actions never
// appear in the kernel's enabled set, so there is no error path here beyond
// the precondition of `apply_action`.

#ifndef COMMFN_MECHANISM_HPP
#define COMMFN_MECHANISM_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "commfn/action.hpp"
#include "commfn/value.hpp"

namespace commfn {

enum class MechanismKind : std::uint8_t {
  RawCell,
  LockedCell,
  MessageCell,
  StatusChannel,
  DuplexChannel,
  LastMessageChannel,
  SharedRegister,
  DirectChannel,
};

std::string_view to_string(MechanismKind k);
std::optional<MechanismKind> parse_mechanism_kind(std::string_view s);

enum class LockMode : std::uint8_t { Undisciplined, Encapsulated };

std::string_view to_string(LockMode m);
std::optional<LockMode> parse_lock_mode(std::string_view s);

/// Unprotected word-divisible location.
struct RawCell {
  Value words;
  friend auto operator<=>(const RawCell&, const RawCell&) = default;
};

/// Location guarded by lock/unlock. In Undisciplined mode the words stay
/// reachable without holding the lock.
struct LockedCell {
  ProcessId owner = kNoProcess;
  Value words;
  LockMode mode = LockMode::Encapsulated;
  friend auto operator<=>(const LockedCell&, const LockedCell&) = default;
};

/// Whole-value atomic read and write, no ordering constraint. Reads are
/// non-destructive; an unwritten cell reads as the empty indicator.
struct MessageCell {
  Datum content = Datum::empty();
  friend auto operator<=>(const MessageCell&, const MessageCell&) = default;
};

/// Single slot: write requires Empty, read requires Full and empties it.
struct StatusChannel {
  Status status = Status::Empty;
  Datum content = Datum::empty();
  friend auto operator<=>(const StatusChannel&, const StatusChannel&) =
      default;
};

/// One slot shared by both directions. The status records who the pending
/// message is for.
struct DuplexChannel {
  Status status = Status::Empty;
  Datum content = Datum::empty();
  ProcessId side_a = kNoProcess;
  ProcessId side_b = kNoProcess;
  bool last_message = false;
  friend auto operator<=>(const DuplexChannel&, const DuplexChannel&) =
      default;
};

/// Writes always succeed and overwrite; reads require Full and empty it.
struct LastMessageChannel {
  Status status = Status::Empty;
  Datum content = Datum::empty();
  friend auto operator<=>(const LastMessageChannel&,
                          const LastMessageChannel&) = default;
};

/// Undirected shared location with atomic read-modify-write and optional
/// explicit locking.
struct SharedRegister {
  Value content;
  ProcessId owner = kNoProcess;
  friend auto operator<=>(const SharedRegister&, const SharedRegister&) =
      default;
};

/// Rendezvous endpoint. Pairing lives in the kernel, so there is no state.
struct DirectChannel {
  friend auto operator<=>(const DirectChannel&, const DirectChannel&) =
      default;
};

/// Alternatives are in MechanismKind order.
using MechanismState =
    std::variant<RawCell, LockedCell, MessageCell, StatusChannel,
                 DuplexChannel, LastMessageChannel, SharedRegister,
                 DirectChannel>;

MechanismKind kind_of(const MechanismState& m);

/// Status for FullFor(p) on a duplex channel: a message waiting to be read
/// by `p`.
Status full_for(const DuplexChannel& d, ProcessId p);

/// Whether action `a` by process `p` passes the mechanism guard. Rendezvous
/// actions (Send/Receive) are never enabled individually.
bool is_enabled(const MechanismState& m, ProcessId p, const ActionLabel& a);

struct MechanismEffect {
  MechanismState next;
  /// Value returned to the acting process: content for Read, a width-1 value
  /// holding the word for ReadWord, the status for CheckStatus.
  Datum observed;
};

/// Applies an enabled action. Calling this with a disabled action is a
/// programming error and throws std::logic_error.
MechanismEffect apply_action(const MechanismState& m, ProcessId p,
                             const ActionLabel& a);

/// Which actions a mechanism kind supports at all, independent of state.
bool supports(MechanismKind k, ActionKind a);

/// Current content as seen by a terminal assertion. Empty for DirectChannel.
Datum content_of(const MechanismState& m);

/// Short human-readable rendering, e.g. "status_channel{full (1,1)}".
std::string describe(const MechanismState& m);

}  // namespace commfn

#endif  // COMMFN_MECHANISM_HPP
