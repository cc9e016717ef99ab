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

#include "commfn/catalog.hpp"

#include <chrono>

#include "commfn/loader.hpp"
#include "commfn/system.hpp"

namespace commfn {
namespace {

const ViolationClass kDeadlock{ViolationKind::Deadlock, {}};
const ViolationClass kTornRead{ViolationKind::TornRead, {}};
const ViolationClass kLostMessage{ViolationKind::LostMessage, {}};

constexpr const char* kTornReadRaw = R"(
name: torn-read-raw
description: >
  Two writers store (1,1) and (2,2) one word at a time into an unprotected
  cell while a third process reads it word by word. Expect TornRead.
word_width: 2
mechanisms:
  - {id: c, kind: raw_cell}
processes:
  - name: writer1
    program:
      - {write_word: c, index: 0, word: 1}
      - {write_word: c, index: 1, word: 1}
  - name: writer2
    program:
      - {write_word: c, index: 0, word: 2}
      - {write_word: c, index: 1, word: 2}
  - name: reader
    program:
      - {read_word: c, index: 0, var: v}
      - {read_word: c, index: 1, var: v}
monitors:
  - {kind: torn_value, mech: c, allowed: [[0, 0], [1, 1], [2, 2]]}
)";

constexpr const char* kTornReadLocked = R"(
name: torn-read-locked
description: >
  The torn-read programs with every access bracketed by lock and unlock on
  an encapsulated cell. Expect no violations.
word_width: 2
mechanisms:
  - {id: c, kind: locked_cell, mode: encapsulated}
processes:
  - name: writer1
    program:
      - {lock: c}
      - {write_word: c, index: 0, word: 1}
      - {write_word: c, index: 1, word: 1}
      - {unlock: c}
  - name: writer2
    program:
      - {lock: c}
      - {write_word: c, index: 0, word: 2}
      - {write_word: c, index: 1, word: 2}
      - {unlock: c}
  - name: reader
    program:
      - {lock: c}
      - {read_word: c, index: 0, var: v}
      - {read_word: c, index: 1, var: v}
      - {unlock: c}
monitors:
  - {kind: torn_value, mech: c, allowed: [[0, 0], [1, 1], [2, 2]]}
)";

constexpr const char* kUndisciplined = R"(
name: undisciplined-third-party
description: >
  A locking writer and a locking reader share a cell whose lock does not
  keep out a third writer that never locks. Expect TornRead at the reader.
word_width: 2
mechanisms:
  - {id: c, kind: locked_cell, mode: undisciplined}
processes:
  - name: writer
    program:
      - {lock: c}
      - {write_word: c, index: 0, word: 1}
      - {write_word: c, index: 1, word: 1}
      - {unlock: c}
  - name: reader
    program:
      - {lock: c}
      - {read_word: c, index: 0, var: v}
      - {read_word: c, index: 1, var: v}
      - {unlock: c}
  - name: intruder
    program:
      - {write_word: c, index: 0, word: 2}
      - {write_word: c, index: 1, word: 2}
monitors:
  - {kind: torn_value, mech: c, process: 1, allowed: [[0, 0], [1, 1], [2, 2]]}
)";

constexpr const char* kLostMessageBasic = R"(
name: lost-message-basic
description: >
  A writer puts 1, 2, 3 into a message cell that a reader reads three
  times. Nothing orders the two, so a message can be overwritten unread.
  Expect LostMessage.
word_width: 1
mechanisms:
  - {id: m, kind: message_cell}
processes:
  - name: writer
    program:
      - {write: m, value: 1}
      - {write: m, value: 2}
      - {write: m, value: 3}
  - name: reader
    program:
      - {read: m, var: a}
      - {read: m, var: b}
      - {read: m, var: c}
monitors:
  - {kind: lost_unread, mech: m}
)";

constexpr const char* kStatusChannelExact = R"(
name: status-channel-exact
description: >
  The lost-message programs over a status channel: writes wait for Empty,
  reads wait for Full. Expect no violations, every message delivered once
  and in order.
word_width: 1
mechanisms:
  - {id: s, kind: status_channel}
processes:
  - name: writer
    program:
      - {write: s, value: 1}
      - {write: s, value: 2}
      - {write: s, value: 3}
  - name: reader
    program:
      - {read: s, var: a}
      - {read: s, var: b}
      - {read: s, var: c}
monitors:
  - {kind: sent_received_order, mech: s, mode: exact}
  - {kind: lost_unread, mech: s}
  - {kind: terminal_assert, name: first, process: 1, var: a, expected: 1}
  - {kind: terminal_assert, name: second, process: 1, var: b, expected: 2}
  - {kind: terminal_assert, name: third, process: 1, var: c, expected: 3}
)";

constexpr const char* kDeadlockDirect = R"(
name: deadlock-direct-duplex
description: >
  Two rendezvous channels, one per direction, and both processes send
  first. Expect Deadlock.
word_width: 1
mechanisms:
  - {id: ab, kind: direct_channel}
  - {id: ba, kind: direct_channel}
processes:
  - name: a
    program:
      - {send: ab, value: 1}
      - {receive: ba, var: x}
  - name: b
    program:
      - {send: ba, value: 2}
      - {receive: ab, var: y}
)";

constexpr const char* kDeadlockFixed = R"(
name: deadlock-fixed-indirect
description: >
  The deadlocking exchange with the b-to-a direction moved to a status
  channel, so b's send no longer waits for a. Expect no violations.
word_width: 1
mechanisms:
  - {id: ab, kind: direct_channel}
  - {id: ba, kind: status_channel}
processes:
  - name: a
    program:
      - {send: ab, value: 1}
      - {read: ba, var: x}
  - name: b
    program:
      - {write: ba, value: 2}
      - {receive: ab, var: y}
monitors:
  - {kind: terminal_assert, name: a-got-2, process: 0, var: x, expected: 2}
  - {kind: terminal_assert, name: b-got-1, process: 1, var: y, expected: 1}
)";

constexpr const char* kDuplexStrict = R"(
name: duplex-strict
description: >
  Two request/response rounds over one strict duplex channel. Each side
  only reads messages meant for it. Expect no violations.
word_width: 1
mechanisms:
  - {id: d, kind: duplex_channel, side_a: 0, side_b: 1}
processes:
  - name: client
    program:
      - {write: d, value: 1}
      - {read: d, var: x}
      - {write: d, value: 3}
      - {read: d, var: z}
  - name: server
    program:
      - {read: d, var: y}
      - {write: d, value: 2}
      - {read: d, var: w}
      - {write: d, value: 4}
monitors:
  - {kind: recipient_tag, mech: d}
  - {kind: lost_unread, mech: d}
  - {kind: terminal_assert, name: client-x, process: 0, var: x, expected: 2}
  - {kind: terminal_assert, name: client-z, process: 0, var: z, expected: 4}
)";

constexpr const char* kDuplexLastMessage = R"(
name: duplex-last-message
description: >
  A last-message duplex channel. Side a may overwrite its own pending
  message, but neither side may overwrite a message waiting for it. Expect
  LostMessage only, never an incoming message lost.
word_width: 1
mechanisms:
  - {id: d, kind: duplex_channel, side_a: 0, side_b: 1, last_message: true}
processes:
  - name: a
    program:
      - {read: d, var: x}
      - {write: d, value: 1}
      - {write: d, value: 2}
  - name: b
    program:
      - {write: d, value: 7}
      - {read: d, var: y}
monitors:
  - {kind: lost_unread, name: unread, mech: d}
  - {kind: recipient_tag, mech: d}
)";

constexpr const char* kLastMessageUni = R"(
name: last-message-unidirectional
description: >
  Three writes to a last-message channel, then a completion signal; the
  reader waits for the signal and reads once. Expect the read to see the
  last write in every schedule.
word_width: 1
mechanisms:
  - {id: l, kind: last_message_channel}
  - {id: done, kind: status_channel}
processes:
  - name: writer
    program:
      - {write: l, value: 1}
      - {write: l, value: 2}
      - {write: l, value: 3}
      - {write: done, value: 1}
  - name: reader
    program:
      - {read: done, var: d}
      - {read: l, var: x}
monitors:
  - {kind: sent_received_order, mech: l, mode: latest}
  - {kind: terminal_assert, name: final-read, process: 1, var: x, expected: 3}
)";

constexpr const char* kRegisterAtomic = R"(
name: register-atomic-update
description: >
  Two processes each apply three atomic increments to a shared register.
  Expect the final value 6 in every schedule.
word_width: 1
mechanisms:
  - {id: r, kind: shared_register}
processes:
  - name: p
    program:
      - loop: 3
        body:
          - {update: r, fn: inc}
  - name: q
    program:
      - loop: 3
        body:
          - {update: r, fn: inc}
monitors:
  - {kind: terminal_assert, name: final-six, mech: r, expected: 6}
)";

constexpr const char* kRegisterLost = R"(
name: register-lost-update
description: >
  The same six increments done as separate read, local increment and
  write steps. Expect lost updates: final values from 2 up to 6.
word_width: 1
mechanisms:
  - {id: r, kind: shared_register}
processes:
  - name: p
    program:
      - loop: 3
        body:
          - {read: r, var: x}
          - {apply: x, fn: inc}
          - {write: r, value: x}
  - name: q
    program:
      - loop: 3
        body:
          - {read: r, var: x}
          - {apply: x, fn: inc}
          - {write: r, value: x}
monitors:
  - {kind: terminal_assert, name: final-six, mech: r, expected: 6}
)";

constexpr const char* kDekker = R"(
name: dekker-mutex
description: >
  Dekker's algorithm over two flag cells and a turn cell, two critical
  section entries per process. Expect mutual exclusion and no deadlock.
word_width: 1
mechanisms:
  - {id: flag0, kind: raw_cell}
  - {id: flag1, kind: raw_cell}
  - {id: turn, kind: raw_cell}
processes:
  - name: p0
    program:
      - loop: 2
        body:
          - {write_word: flag0, index: 0, word: 1}
          - if_word: flag1
            index: 0
            word: 1
            then:
              - if_word: turn
                index: 0
                word: 1
                then:
                  - {write_word: flag0, index: 0, word: 0}
                  - {await_word: turn, index: 0, word: 0}
                  - {write_word: flag0, index: 0, word: 1}
              - {await_word: flag1, index: 0, word: 0}
          - {local: cs, value: 1, label: enter0}
          - {local: cs, value: 0, label: exit0}
          - {write_word: turn, index: 0, word: 1}
          - {write_word: flag0, index: 0, word: 0}
  - name: p1
    program:
      - loop: 2
        body:
          - {write_word: flag1, index: 0, word: 1}
          - if_word: flag0
            index: 0
            word: 1
            then:
              - if_word: turn
                index: 0
                word: 0
                then:
                  - {write_word: flag1, index: 0, word: 0}
                  - {await_word: turn, index: 0, word: 1}
                  - {write_word: flag1, index: 0, word: 1}
              - {await_word: flag0, index: 0, word: 0}
          - {local: cs, value: 1, label: enter1}
          - {local: cs, value: 0, label: exit1}
          - {write_word: turn, index: 0, word: 0}
          - {write_word: flag1, index: 0, word: 0}
monitors:
  - kind: mutual_exclusion
    name: mutex
    mech: turn
    critical:
      - {process: 0, enter: enter0, exit: exit0}
      - {process: 1, enter: enter1, exit: exit1}
)";

constexpr const char* kDecomposition = R"(
name: decomposition-equivalence
description: >
  A writer sends 1, 2, 3 through a message cell and a reader reads it three
  times. Its reader-observed sequences equal those of the relay companion,
  where a relay process between two rendezvous channels plays the cell.
word_width: 1
mechanisms:
  - {id: m, kind: message_cell}
processes:
  - name: writer
    program:
      - {write: m, value: 1}
      - {write: m, value: 2}
      - {write: m, value: 3}
  - name: reader
    program:
      - {read: m, var: a}
      - {read: m, var: b}
      - {read: m, var: c}
)";

constexpr const char* kDecompositionRelay = R"(
name: decomposition-relay
description: >
  The message cell replaced by a relay process that holds the current
  content and, at each step, either takes a new message from the writer or
  hands its content to the reader.
word_width: 1
mechanisms:
  - {id: in, kind: direct_channel}
  - {id: out, kind: direct_channel}
processes:
  - name: writer
    program:
      - {send: in, value: 1}
      - {send: in, value: 2}
      - {send: in, value: 3}
  - name: reader
    program:
      - {receive: out, var: a}
      - {receive: out, var: b}
      - {receive: out, var: c}
  - name: relay
    program:
      - {local: x, value: empty}
      - loop: 6
        body:
          - select:
              - [{receive: in, var: x}]
              - [{send: out, value: x}]
)";

CatalogEntry make(const char* doc, std::set<ViolationClass> expected,
                  const char* companion = nullptr) {
  CatalogEntry e;
  e.document = doc;
  e.scenario = load_scenario(e.document);
  e.name = e.scenario.name;
  e.expected = std::move(expected);
  if (companion != nullptr) e.companion = load_scenario(companion);
  return e;
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  out.push_back(make(kTornReadRaw, {kTornRead}));
  out.push_back(make(kTornReadLocked, {}));
  out.push_back(make(kUndisciplined, {kTornRead}));
  out.push_back(make(kLostMessageBasic, {kLostMessage}));
  out.push_back(make(kStatusChannelExact, {}));
  out.push_back(make(kDeadlockDirect, {kDeadlock}));
  out.push_back(make(kDeadlockFixed, {}));
  out.push_back(make(kDuplexStrict, {}));
  out.push_back(make(kDuplexLastMessage, {kLostMessage}));
  out.push_back(make(kLastMessageUni, {}));
  out.push_back(make(kRegisterAtomic, {}));
  out.push_back(make(kRegisterLost,
                     {ViolationClass{ViolationKind::MonitorAssert, "final-six"}}));
  out.push_back(make(kDekker, {}));
  out.push_back(make(kDecomposition, {}, kDecompositionRelay));
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

bool CatalogCheck::passed() const {
  return !report.bounds_hit && report.classes() == expected;
}

CatalogCheck check_catalog_entry(const CatalogEntry& entry) {
  const auto start = std::chrono::steady_clock::now();
  const System sys = System::compile(entry.scenario);
  CatalogCheck check;
  check.name = entry.name;
  check.expected = entry.expected;
  check.report = explore(sys);
  check.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return check;
}

}  // namespace commfn
