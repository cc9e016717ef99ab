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

#include "commfn/report_io.hpp"

#include <gtest/gtest.h>
#include <yaml-cpp/yaml.h>

#include "commfn/errors.hpp"
#include "commfn/kernel.hpp"
#include "test_util.hpp"

namespace commfn {
namespace {

using testing::compile_catalog;

TEST(ReportIoTest, TraceDocumentsRoundTrip) {
  for (const auto& e : catalog()) {
    const System sys = System::compile(e.scenario);
    for (const Violation& v : explore(sys).violations) {
      const TraceDocument doc{sys.name(), v.cls, v.trace};
      const TraceDocument back = parse_trace(sys, serialize_trace(sys, doc));
      EXPECT_EQ(back.scenario, doc.scenario);
      EXPECT_EQ(back.violation, doc.violation);
      EXPECT_EQ(back.trace, doc.trace) << e.name;
    }
  }
}

TEST(ReportIoTest, EveryStepKindRoundTrips) {
  // One full schedule per scenario exercises every action kind the
  // catalog uses.
  for (const auto& e : catalog()) {
    const System sys = System::compile(e.scenario);
    GlobalState s = sys.initial_state();
    Trace t;
    while (true) {
      const auto enabled = enabled_actions(sys, s);
      if (enabled.empty()) break;
      t.push_back(enabled.back());
      s = step(sys, s, t.back());
    }
    const TraceDocument back =
        parse_trace(sys, serialize_trace(sys, {sys.name(), std::nullopt, t}));
    EXPECT_EQ(back.trace, t) << e.name;
    EXPECT_FALSE(back.violation.has_value());
  }
}

TEST(ReportIoTest, ReportTraceReplays) {
  const System sys = compile_catalog("lost-message-basic");
  const ExplorationReport r = explore(sys);
  const TraceDocument doc = parse_trace(sys, serialize_report(sys, r));
  ASSERT_TRUE(doc.violation.has_value());
  EXPECT_EQ(*doc.violation, r.violations[0].cls);
  EXPECT_TRUE(reproduces(sys, doc.trace, *doc.violation));
}

TEST(ReportIoTest, TextAndStructuredAgree) {
  for (const auto& e : catalog()) {
    const System sys = System::compile(e.scenario);
    const ExplorationReport r = explore(sys);
    const YAML::Node doc = YAML::Load(serialize_report(sys, r));
    const std::string text = format_report(sys, r);
    ASSERT_EQ(doc["violations"].size(), r.violations.size());
    EXPECT_NE(text.find("violations: " + std::to_string(r.violations.size())),
              std::string::npos);
    EXPECT_EQ(doc["states_visited"].as<std::uint64_t>(), r.states_visited);
    EXPECT_EQ(doc["bounds_hit"].as<bool>(), r.bounds_hit);
    for (std::size_t i = 0; i < r.violations.size(); ++i) {
      const std::string cls = to_string(r.violations[i].cls);
      EXPECT_EQ(doc["violations"][i]["violation"].as<std::string>(), cls);
      EXPECT_NE(text.find(cls), std::string::npos);
    }
  }
}

TEST(ReportIoTest, UnknownMechanismInTraceIsParseError) {
  const System sys = compile_catalog("status-channel-exact");
  EXPECT_THROW(parse_trace(sys, "steps:\n  - {process: 0, action: write, "
                                "mech: zz, value: [1]}\n"),
               ParseError);
}

TEST(ReportIoTest, WrongWidthValueIsParseError) {
  const System sys = compile_catalog("status-channel-exact");
  EXPECT_THROW(parse_trace(sys, "steps:\n  - {process: 0, action: write, "
                                "mech: s, value: [1, 1]}\n"),
               ParseError);
}

TEST(ReportIoTest, ProcessOutOfRangeIsParseError) {
  const System sys = compile_catalog("status-channel-exact");
  EXPECT_THROW(parse_trace(sys, "steps:\n  - {process: 5, action: local}\n"),
               ParseError);
}

TEST(ReportIoTest, CleanReportYieldsEmptyTrace) {
  const System sys = compile_catalog("torn-read-locked");
  const TraceDocument doc = parse_trace(sys, serialize_report(sys, explore(sys)));
  EXPECT_TRUE(doc.trace.empty());
  EXPECT_FALSE(doc.violation.has_value());
}

}  // namespace
}  // namespace commfn
