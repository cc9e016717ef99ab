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

#include <gtest/gtest.h>

#include "commfn/kernel.hpp"
#include "test_util.hpp"

namespace commfn {
namespace {

using testing::compile_yaml;

const ViolationClass kLost{ViolationKind::LostMessage, {}};

std::set<ViolationClass> classes_of(const System& sys) {
  return explore(sys).classes();
}

TEST(MonitorTest, MutualExclusionFlagsUnprotectedSections) {
  const System sys = compile_yaml(R"(
name: mutex
word_width: 1
mechanisms:
  - {id: f, kind: raw_cell}
processes:
  - name: p
    program:
      - {write_word: f, index: 0, word: 1}
      - {local: cs, value: 1, label: in}
      - {local: cs, value: 0, label: out}
  - name: q
    program:
      - {local: cs, value: 1, label: in}
      - {local: cs, value: 0, label: out}
monitors:
  - kind: mutual_exclusion
    name: mx
    mech: f
    critical:
      - {process: 0, enter: in, exit: out}
      - {process: 1, enter: in, exit: out}
)");
  EXPECT_EQ(classes_of(sys), (std::set<ViolationClass>{
                                 {ViolationKind::MonitorAssert, "mx"}}));
}

TEST(MonitorTest, ExactOrderHoldsForSerializedWriters) {
  // Two writers on a status channel: the reader's expectation of FIFO over
  // all writes holds, since the channel serializes them.
  const System sys = compile_yaml(R"(
name: order
word_width: 1
mechanisms:
  - {id: s, kind: status_channel}
processes:
  - name: w1
    program:
      - {write: s, value: 1}
  - name: w2
    program:
      - {write: s, value: 2}
  - name: r
    program:
      - {read: s, var: a}
      - {read: s, var: b}
monitors:
  - {kind: sent_received_order, mech: s, mode: exact}
)");
  EXPECT_TRUE(classes_of(sys).empty());
}

TEST(MonitorTest, ExactOrderFlagsUndeliveredMessage) {
  const System sys = compile_yaml(R"(
name: pending
word_width: 1
mechanisms:
  - {id: s, kind: status_channel}
processes:
  - name: w
    program:
      - {write: s, value: 1}
  - name: r
    program:
      - {check: s, var: st}
monitors:
  - {kind: sent_received_order, mech: s, mode: exact}
)");
  EXPECT_EQ(classes_of(sys), std::set<ViolationClass>{kLost});
}

TEST(MonitorTest, ExactOrderFlagsOverwrittenMessage) {
  const System sys = compile_yaml(R"(
name: overwrite
word_width: 1
mechanisms:
  - {id: m, kind: message_cell}
processes:
  - name: w
    program:
      - {write: m, value: 1}
      - {write: m, value: 2}
  - name: r
    program:
      - {read: m, var: a}
monitors:
  - {kind: sent_received_order, mech: m, mode: exact}
)");
  EXPECT_EQ(classes_of(sys), std::set<ViolationClass>{kLost});
}

TEST(MonitorTest, TornValueChecksWholeReads) {
  const System sys = compile_yaml(R"(
name: whole
word_width: 1
mechanisms:
  - {id: m, kind: message_cell}
processes:
  - name: w
    program:
      - {write: m, value: 5}
  - name: r
    program:
      - {read: m, var: a}
monitors:
  - {kind: torn_value, mech: m, allowed: [[1]]}
)");
  EXPECT_EQ(classes_of(sys), (std::set<ViolationClass>{
                                 {ViolationKind::TornRead, {}}}));
}

TEST(MonitorTest, TerminalAssertOnLocalAndMechanism) {
  const System sys = compile_yaml(R"(
name: terminal
word_width: 1
mechanisms:
  - {id: r, kind: shared_register}
processes:
  - name: p
    program:
      - {update: r, fn: add(3)}
      - {read: r, var: x}
monitors:
  - {kind: terminal_assert, name: reg, mech: r, expected: 3}
  - {kind: terminal_assert, name: loc, process: 0, var: x, expected: 4}
)");
  EXPECT_EQ(classes_of(sys), (std::set<ViolationClass>{
                                 {ViolationKind::MonitorAssert, "loc"}}));
}

TEST(MonitorTest, AssertLocalStep) {
  const System sys = compile_yaml(R"(
name: assert
word_width: 1
mechanisms:
  - {id: m, kind: message_cell}
processes:
  - name: p
    program:
      - {read: m, var: x}
      - {assert_local: x, value: 1}
)");
  EXPECT_EQ(classes_of(sys), (std::set<ViolationClass>{
                                 {ViolationKind::MonitorAssert,
                                  "assert_local:P0:x"}}));
}

// The duplex guards never allow a side to write over a message waiting for
// it, so these two cases are driven through observe_step directly.
constexpr const char* kDuplex = R"(
name: duplex
word_width: 1
mechanisms:
  - {id: d, kind: duplex_channel, side_a: 0, side_b: 1}
processes:
  - name: a
    program:
      - {write: d, value: 1}
      - {read: d, var: x}
  - name: b
    program:
      - {write: d, value: 2}
monitors:
  - {kind: recipient_tag, mech: d}
  - {kind: lost_unread, name: unread, mech: d}
)";

Choice write_by(ProcessId p) {
  Choice c{p, {ActionKind::Write, 0, 0, Datum::of(Value::filled(1, 1)), {}},
           0, kNoProcess};
  return c;
}

TEST(MonitorTest, RecipientTagFlagsReadingOwnMessage) {
  const System sys = compile_yaml(kDuplex);
  GlobalState s = sys.initial_state();
  GlobalState after = s;
  std::vector<ViolationClass> hits;
  observe_step(sys, s, StepEvent{write_by(0), 0, -1, {}}, after, hits);
  s = after;
  Choice read{0, {ActionKind::Read, 0, 0, {}, {}}, 0, kNoProcess};
  observe_step(sys, s,
               StepEvent{read, 1, -1, Datum::of(Value::filled(1, 1))}, after,
               hits);
  EXPECT_EQ(hits, (std::vector<ViolationClass>{
                      {ViolationKind::WrongRecipient, {}}}));
}

TEST(MonitorTest, LostUnreadDistinguishesIncomingOnDuplex) {
  const System sys = compile_yaml(kDuplex);
  GlobalState s = sys.initial_state();
  GlobalState after = s;
  std::vector<ViolationClass> hits;
  observe_step(sys, s, StepEvent{write_by(1), 0, -1, {}}, after, hits);
  s = after;
  observe_step(sys, s, StepEvent{write_by(0), 0, -1, {}}, after, hits);
  EXPECT_EQ(hits, (std::vector<ViolationClass>{
                      {ViolationKind::MonitorAssert, "unread:incoming"}}));
  s = after;
  hits.clear();
  observe_step(sys, s, StepEvent{write_by(0), 0, -1, {}}, after, hits);
  EXPECT_EQ(hits, std::vector<ViolationClass>{kLost});
}

TEST(MonitorTest, MonitorsDoNotTouchKernelState) {
  const System sys = testing::compile_catalog("status-channel-exact");
  const GlobalState s = sys.initial_state();
  const Choice c = enabled_actions(sys, s)[0];
  const StepOutcome out = advance(sys, s, c);
  GlobalState again = out.state;
  again.ghost = s.ghost;
  std::vector<ViolationClass> hits;
  GlobalState observed = again;
  observe_step(sys, s, StepEvent{c, 0, -1, {}}, observed, hits);
  EXPECT_EQ(observed.mechanisms, again.mechanisms);
  EXPECT_EQ(observed.processes.size(), again.processes.size());
  for (std::size_t p = 0; p < again.processes.size(); ++p) {
    EXPECT_EQ(observed.processes[p].pc, again.processes[p].pc);
    EXPECT_EQ(observed.processes[p].locals, again.processes[p].locals);
  }
}

}  // namespace
}  // namespace commfn
