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

#include "commfn/explorer.hpp"

#include <gtest/gtest.h>

#include <map>
#include <string>

#include "commfn/kernel.hpp"
#include "test_util.hpp"

namespace commfn {
namespace {

using testing::compile_catalog;
using testing::compile_yaml;
using testing::local_of;

// Independent oracle: number of interleavings of independent sequences with
// the given lengths, by direct recursion over which process moves next.
std::uint64_t interleavings(std::vector<int> lengths) {
  bool any = false;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] == 0) continue;
    any = true;
    --lengths[i];
    total += interleavings(lengths);
    ++lengths[i];
  }
  return any ? total : 1;
}

std::string independent(int processes, int steps) {
  std::string doc = "name: independent\nword_width: 1\nprocesses:\n";
  for (int p = 0; p < processes; ++p) {
    doc += "  - name: p" + std::to_string(p) + "\n    program:\n";
    for (int s = 0; s < steps; ++s) {
      doc += "      - {local: x, value: " + std::to_string(s) + "}\n";
    }
  }
  return doc;
}

TEST(ExplorerTest, TwoIndependentThreeStepProcessesHaveTwentySchedules) {
  const ExplorationReport r = explore(compile_yaml(independent(2, 3)));
  ASSERT_EQ(interleavings({3, 3}), 20u);
  EXPECT_EQ(r.schedules_complete, interleavings({3, 3}));
  EXPECT_EQ(r.states_visited, 16u);  // (3+1) x (3+1) program counters
  EXPECT_EQ(r.distinct_terminal_states, 1u);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_FALSE(r.bounds_hit);
}

TEST(ExplorerTest, ScheduleCountMatchesOracleForThreeProcesses) {
  const ExplorationReport r = explore(compile_yaml(independent(3, 2)));
  EXPECT_EQ(r.schedules_complete, interleavings({2, 2, 2}));
}

TEST(ExplorerTest, DirectDuplexReportsExactlyOneDeadlockClass) {
  const ExplorationReport r = explore(compile_catalog("deadlock-direct-duplex"));
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].cls.kind, ViolationKind::Deadlock);
  EXPECT_EQ(r.deadlock_states, 1u);
}

TEST(ExplorerTest, IndirectFixHasNoViolations) {
  const ExplorationReport r =
      explore(compile_catalog("deadlock-fixed-indirect"));
  EXPECT_TRUE(r.violations.empty());
  EXPECT_FALSE(r.bounds_hit);
}

TEST(ExplorerTest, ShortestTornReadYieldsMixedValue) {
  const System sys = compile_catalog("torn-read-raw");
  const auto v = find_shortest(sys, ViolationKind::TornRead, sys.bounds());
  ASSERT_TRUE(v.has_value());
  const GlobalState end = replay(sys, v->trace);
  const Datum& got = local_of(sys, end, 2, "v");
  ASSERT_TRUE(got.is_value());
  EXPECT_NE(got.value[0], got.value[1]);
  // A mixed read needs one word from each source, so at least one write
  // before the first read and one write between the two reads.
  EXPECT_EQ(v->trace.size(), 3u);
}

TEST(ExplorerTest, ShortestIsNoLongerThanExploreTrace) {
  for (const auto& e : catalog()) {
    const System sys = System::compile(e.scenario);
    const ExplorationReport r = explore(sys);
    for (const Violation& v : r.violations) {
      const auto s = find_shortest(sys, v.cls.kind, sys.bounds(), v.cls.name);
      ASSERT_TRUE(s.has_value()) << e.name;
      EXPECT_LE(s->trace.size(), v.trace.size()) << e.name;
      EXPECT_TRUE(reproduces(sys, s->trace, v.cls)) << e.name;
    }
  }
}

TEST(ExplorerTest, StatusChannelHasNoLostMessage) {
  const System sys = compile_catalog("status-channel-exact");
  EXPECT_FALSE(find_shortest(sys, ViolationKind::LostMessage, sys.bounds()));
}

TEST(ExplorerTest, EmptyScenarioHasNothingToFind) {
  const System sys = compile_yaml("name: empty\nword_width: 1\n");
  EXPECT_FALSE(find_shortest(sys, ViolationKind::Deadlock, sys.bounds()));
  const ExplorationReport r = explore(sys);
  EXPECT_EQ(r.states_visited, 1u);
  EXPECT_EQ(r.schedules_complete, 1u);
  EXPECT_TRUE(r.violations.empty());
}

TEST(ExplorerTest, EveryReportedTraceReproducesItsViolation) {
  for (const auto& e : catalog()) {
    const System sys = System::compile(e.scenario);
    for (const Violation& v : explore(sys).violations) {
      EXPECT_TRUE(reproduces(sys, v.trace, v.cls))
          << e.name << " " << to_string(v.cls);
      EXPECT_EQ(replay(sys, v.trace).hash(), v.state_hash) << e.name;
      EXPECT_GE(v.occurrences, 1u);
    }
  }
}

TEST(ExplorerTest, EqualHashesMeanEqualStates) {
  for (const auto& e : catalog()) {
    const System sys = System::compile(e.scenario);
    std::map<std::uint64_t, GlobalState> seen;
    std::size_t visited = 0;
    ExploreOptions opts;
    opts.on_state = [&](const GlobalState& s) {
      ++visited;
      auto [it, inserted] = seen.emplace(s.hash(), s);
      EXPECT_TRUE(inserted) << e.name << ": state reported twice or hash "
                            << "collision";
      if (!inserted) EXPECT_EQ(it->second, s) << e.name;
    };
    const ExplorationReport r = explore(sys, sys.bounds(), opts);
    EXPECT_EQ(visited, r.states_visited) << e.name;
  }
}

TEST(ExplorerTest, StateBoundIsReportedNotThrown) {
  const System sys = compile_catalog("dekker-mutex");
  const ExplorationReport r = explore(sys, Bounds{200, 10});
  EXPECT_TRUE(r.bounds_hit);
  EXPECT_FALSE(r.schedules_complete.has_value());
  EXPECT_LE(r.states_visited, 10u);
}

TEST(ExplorerTest, DepthBoundIsReported) {
  const System sys = compile_catalog("register-lost-update");
  const ExplorationReport r = explore(sys, Bounds{5, 1'000'000});
  EXPECT_TRUE(r.bounds_hit);
  EXPECT_TRUE(r.violations.empty());
}

TEST(ExplorerTest, ExploreIsDeterministic) {
  for (const auto& e : catalog()) {
    const System sys = System::compile(e.scenario);
    const ExplorationReport a = explore(sys);
    const ExplorationReport b = explore(sys);
    EXPECT_EQ(a.states_visited, b.states_visited);
    EXPECT_EQ(a.schedules_complete, b.schedules_complete);
    ASSERT_EQ(a.violations.size(), b.violations.size());
    for (std::size_t i = 0; i < a.violations.size(); ++i) {
      EXPECT_EQ(a.violations[i].cls, b.violations[i].cls);
      EXPECT_EQ(a.violations[i].trace, b.violations[i].trace);
      EXPECT_EQ(a.violations[i].occurrences, b.violations[i].occurrences);
    }
  }
}

TEST(ExplorerTest, RandomWalkFindsOnlyReportedClasses) {
  for (const auto& e : catalog()) {
    const System sys = System::compile(e.scenario);
    const auto classes = explore(sys).classes();
    const RandomWalkSummary w = random_walk(sys, 500, 7, 200);
    EXPECT_EQ(w.runs, 500u);
    for (const auto& c : w.classes) {
      EXPECT_TRUE(classes.count(c)) << e.name << " " << to_string(c);
    }
    for (const auto& [cls, trace] : w.witnesses) {
      EXPECT_TRUE(replay_recorded(sys, trace).states.size() == trace.size());
    }
  }
}

TEST(ExplorerTest, RandomWalkIsSeeded) {
  const System sys = compile_catalog("register-lost-update");
  const auto a = random_walk(sys, 50, 11, 200);
  const auto b = random_walk(sys, 50, 11, 200);
  EXPECT_EQ(a.classes, b.classes);
  EXPECT_EQ(a.witnesses, b.witnesses);
}

}  // namespace
}  // namespace commfn
