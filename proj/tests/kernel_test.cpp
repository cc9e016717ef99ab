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

#include "commfn/kernel.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

#include "commfn/errors.hpp"
#include "test_util.hpp"

namespace commfn {
namespace {

using testing::compile_catalog;
using testing::compile_yaml;
using testing::local_of;

constexpr const char* kPingPong = R"(
name: ping
word_width: 1
mechanisms:
  - {id: c, kind: direct_channel}
  - {id: s, kind: status_channel}
processes:
  - name: a
    program:
      - {send: c, value: 3}
      - {write: s, value: 4}
  - name: b
    program:
      - {receive: c, var: x}
  - name: c
    program:
      - {receive: c, var: y}
)";

TEST(KernelTest, RendezvousPairsSenderWithEachReceiver) {
  const System sys = compile_yaml(kPingPong);
  const auto enabled = enabled_actions(sys, sys.initial_state());
  ASSERT_EQ(enabled.size(), 2u);
  EXPECT_EQ(enabled[0].process, 0);
  EXPECT_EQ(enabled[0].partner, 1);
  EXPECT_EQ(enabled[1].partner, 2);
  EXPECT_EQ(enabled[0].action.kind, ActionKind::Send);
}

TEST(KernelTest, RendezvousMovesBothProcessesAndBindsValue) {
  const System sys = compile_yaml(kPingPong);
  const GlobalState init = sys.initial_state();
  const Choice c = enabled_actions(sys, init)[1];
  const GlobalState s = step(sys, init, c);
  EXPECT_TRUE(s.processes[2].terminated());
  EXPECT_FALSE(s.processes[1].terminated());
  EXPECT_EQ(local_of(sys, s, 2, "y"), Datum::of(Value::filled(1, 3)));
  EXPECT_EQ(s.mechanisms, init.mechanisms);
}

TEST(KernelTest, StateViolationsReportDeadlockNotTermination) {
  const System sys = compile_yaml(kPingPong);
  GlobalState s = sys.initial_state();
  s = step(sys, s, enabled_actions(sys, s)[0]);
  s = step(sys, s, enabled_actions(sys, s)[0]);
  ASSERT_TRUE(enabled_actions(sys, s).empty());
  EXPECT_EQ(state_violations(sys, s),
            (std::vector<ViolationClass>{{ViolationKind::Deadlock, {}}}));
}

TEST(KernelTest, EnabledActionsAreSortedByProcessThenAction) {
  const System sys = compile_catalog("torn-read-raw");
  const auto enabled = enabled_actions(sys, sys.initial_state());
  ASSERT_EQ(enabled.size(), 3u);
  for (std::size_t i = 0; i < enabled.size(); ++i) {
    EXPECT_EQ(enabled[i].process, static_cast<ProcessId>(i));
  }
  EXPECT_TRUE(std::is_sorted(enabled.begin(), enabled.end()));
}

TEST(KernelTest, AdvanceRejectsDisabledChoice) {
  const System sys = compile_catalog("status-channel-exact");
  Choice read{1, {ActionKind::Read, 0, 0, {}, {}}, 0, kNoProcess};
  EXPECT_THROW(advance(sys, sys.initial_state(), read), std::invalid_argument);
}

TEST(KernelTest, ReplayRejectsStaleTraceAtIndex) {
  const System sys = compile_catalog("status-channel-exact");
  const GlobalState init = sys.initial_state();
  Trace t{enabled_actions(sys, init)[0]};
  t.push_back(t[0]);  // second write while the slot is still full
  try {
    replay(sys, t);
    FAIL() << "expected NotEnabledAtStep";
  } catch (const NotEnabledAtStep& e) {
    EXPECT_EQ(e.index(), 1u);
  }
}

TEST(KernelTest, EmptyTraceReplaysToInitialState) {
  const System sys = compile_catalog("dekker-mutex");
  EXPECT_EQ(replay(sys, {}).encode(), sys.initial_state().encode());
}

TEST(KernelTest, StepIsDeterministic) {
  const System sys = compile_catalog("register-lost-update");
  const GlobalState init = sys.initial_state();
  for (const Choice& c : enabled_actions(sys, init)) {
    EXPECT_EQ(step(sys, init, c).encode(), step(sys, init, c).encode());
  }
}

TEST(KernelTest, IfStatusBranchesOnCheckedSnapshot) {
  const System sys = compile_yaml(R"(
name: branch
word_width: 1
mechanisms:
  - {id: s, kind: status_channel}
processes:
  - name: p
    program:
      - if_status: s
        full:
          - {local: r, value: 1}
        empty:
          - {local: r, value: 2}
)");
  const GlobalState s = replay(sys, {enabled_actions(sys, sys.initial_state())[0]});
  const GlobalState t = step(sys, s, enabled_actions(sys, s)[0]);
  EXPECT_EQ(local_of(sys, t, 0, "r"), Datum::of(Value::filled(1, 2)));
}

TEST(KernelTest, AwaitWordBlocksUntilMatch) {
  const System sys = compile_yaml(R"(
name: await
word_width: 1
mechanisms:
  - {id: f, kind: raw_cell}
processes:
  - name: waiter
    program:
      - {await_word: f, index: 0, word: 1}
  - name: setter
    program:
      - {write_word: f, index: 0, word: 1}
)");
  const auto enabled = enabled_actions(sys, sys.initial_state());
  ASSERT_EQ(enabled.size(), 1u);
  EXPECT_EQ(enabled[0].process, 1);
}

TEST(KernelTest, EmptyValueWrittenToChannelIsAFault) {
  const System sys = compile_yaml(R"(
name: fault
word_width: 1
mechanisms:
  - {id: m, kind: message_cell}
  - {id: s, kind: status_channel}
processes:
  - name: p
    program:
      - {read: m, var: x}
      - {write: s, value: x}
)");
  const GlobalState s = step(sys, sys.initial_state(),
                             enabled_actions(sys, sys.initial_state())[0]);
  EXPECT_EQ(faulted_processes(sys, s), std::vector<ProcessId>{0});
  const auto v = state_violations(sys, s);
  EXPECT_NE(std::find(v.begin(), v.end(),
                      ViolationClass{ViolationKind::MonitorAssert, "fault:P0"}),
            v.end());
}

TEST(KernelTest, SelectOffersEveryAlternative) {
  const System sys = System::compile(
      *find_catalog_entry("decomposition-equivalence")->companion);
  GlobalState s = sys.initial_state();
  s = step(sys, s, enabled_actions(sys, s).back());  // relay's local step
  const auto enabled = enabled_actions(sys, s);
  // writer -> relay on `in`, relay -> reader on `out`
  ASSERT_EQ(enabled.size(), 2u);
  EXPECT_EQ(enabled[0].process, 0);
  EXPECT_EQ(enabled[0].partner, 2);
  EXPECT_EQ(enabled[1].process, 2);
  EXPECT_EQ(enabled[1].partner, 1);
  EXPECT_EQ(enabled[1].action.value, Datum::empty());
}

TEST(StateTest, EncodingDistinguishesLocals) {
  const System sys = compile_catalog("register-lost-update");
  GlobalState a = sys.initial_state();
  GlobalState b = a;
  b.processes[0].locals[0] = Datum::of(Value::zero(1));
  EXPECT_NE(a.encode(), b.encode());
  EXPECT_NE(a.hash(), b.hash());
  EXPECT_EQ(format_hash(0x1f), "0x000000000000001f");
}

}  // namespace
}  // namespace commfn
