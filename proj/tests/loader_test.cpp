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

#include "commfn/loader.hpp"

#include <gtest/gtest.h>

#include <string>

#include "commfn/catalog.hpp"
#include "commfn/errors.hpp"

namespace commfn {
namespace {

constexpr const char* kMinimal = R"(
name: minimal
word_width: 1
mechanisms:
  - {id: s, kind: status_channel}
processes:
  - name: writer
    program:
      - {write: s, value: 1}
  - name: reader
    program:
      - {read: s, var: x}
)";

std::string validation_text(const std::string& doc) {
  try {
    load_scenario(doc);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return {};
}

TEST(LoaderTest, MinimalDocumentLoads) {
  const Scenario s = load_scenario(kMinimal);
  EXPECT_EQ(s.name, "minimal");
  EXPECT_EQ(s.word_width, 1);
  ASSERT_EQ(s.mechanisms.size(), 1u);
  EXPECT_EQ(s.mechanisms[0].kind, MechanismKind::StatusChannel);
  ASSERT_EQ(s.processes.size(), 2u);
  EXPECT_EQ(s.processes[1].program[0].kind, StepKind::Read);
  EXPECT_FALSE(s.bounds.has_value());
}

TEST(LoaderTest, UndeclaredMechanismIsNamed) {
  std::string doc = kMinimal;
  doc.replace(doc.find("{read: s"), 8, "{read: c9");
  const std::string msg = validation_text(doc);
  EXPECT_NE(msg.find("c9"), std::string::npos) << msg;
  EXPECT_NE(msg.find("12:"), std::string::npos) << msg;
}

TEST(LoaderTest, DuplexSidesMustDiffer) {
  const std::string doc = R"(
name: duplex
word_width: 1
mechanisms:
  - {id: d, kind: duplex_channel, side_a: 0, side_b: 0}
processes:
  - name: a
    program:
      - {write: d, value: 1}
  - name: b
    program:
      - {read: d, var: x}
)";
  EXPECT_THROW(load_scenario(doc), ValidationError);
}

TEST(LoaderTest, UnknownUpdateFunctionIsParseError) {
  const std::string doc = R"(
name: reg
word_width: 1
mechanisms:
  - {id: r, kind: shared_register}
processes:
  - name: p
    program:
      - {update: r, fn: square}
)";
  try {
    load_scenario(doc);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.pos().line, 9);  // the raw string opens with a newline
    EXPECT_NE(std::string(e.what()).find("square"), std::string::npos);
  }
}

TEST(LoaderTest, UnboundVariableIsReported) {
  std::string doc = kMinimal;
  doc.replace(doc.find("value: 1"), 8, "value: y");
  const std::string msg = validation_text(doc);
  EXPECT_NE(msg.find("y"), std::string::npos) << msg;
}

TEST(LoaderTest, UnknownMechanismKindIsRejected) {
  std::string doc = kMinimal;
  doc.replace(doc.find("status_channel"), 14, "mailbox");
  EXPECT_ANY_THROW(load_scenario(doc));
}

TEST(LoaderTest, UnsupportedActionIsRejected) {
  std::string doc = kMinimal;
  doc.replace(doc.find("{read: s, var: x}"), 17,
              "{read_word: s, index: 0, var: x}");
  EXPECT_THROW(load_scenario(doc), ValidationError);
}

TEST(LoaderTest, MalformedYamlHasPosition) {
  try {
    load_scenario("name: [unclosed\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_GT(e.pos().line, 0);
  }
}

TEST(LoaderTest, UnknownFieldIsRejected) {
  std::string doc = kMinimal;
  doc.replace(doc.find("word_width"), 10, "word_wdith");
  EXPECT_THROW(load_scenario(doc), ParseError);
}

TEST(LoaderTest, NestingDeeperThanThreeIsRejected) {
  const std::string doc = R"(
name: deep
word_width: 1
mechanisms:
  - {id: r, kind: shared_register}
processes:
  - name: p
    program:
      - loop: 1
        body:
          - loop: 1
            body:
              - loop: 1
                body:
                  - loop: 1
                    body:
                      - {update: r, fn: inc}
)";
  EXPECT_THROW(load_scenario(doc), ValidationError);
}

TEST(LoaderTest, UnrolledLengthIsCapped) {
  const std::string doc = R"(
name: long
word_width: 1
mechanisms:
  - {id: r, kind: shared_register}
processes:
  - name: p
    program:
      - loop: 65
        body:
          - {update: r, fn: inc}
)";
  EXPECT_THROW(load_scenario(doc), ValidationError);
}

TEST(LoaderTest, UnrolledSizeCountsLoopBodies) {
  const Scenario s = find_catalog_entry("register-lost-update")->scenario;
  EXPECT_EQ(unrolled_size(s.processes[0].program), 9);
}

TEST(LoaderTest, EveryValidationProblemIsListed) {
  std::string doc = kMinimal;
  doc.replace(doc.find("{write: s"), 9, "{write: q1");
  doc.replace(doc.find("{read: s"), 8, "{read: q2");
  try {
    load_scenario(doc);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("q1"), std::string::npos) << msg;
    EXPECT_NE(msg.find("q2"), std::string::npos) << msg;
  }
}

TEST(LoaderTest, SerializeRoundTripsEveryCatalogScenario) {
  for (const auto& e : catalog()) {
    const std::string text = serialize_scenario(e.scenario);
    EXPECT_EQ(load_scenario(text), e.scenario) << e.name << "\n" << text;
    EXPECT_EQ(serialize_scenario(load_scenario(text)), text) << e.name;
  }
}

TEST(LoaderTest, DefaultBounds) {
  const Bounds b;
  EXPECT_EQ(b.max_depth, 200);
  EXPECT_EQ(b.max_states, 1'000'000);
}

TEST(LoaderTest, NonPositiveBoundsAreRejected) {
  std::string doc = kMinimal;
  doc += "bounds: {max_depth: 0, max_states: 10}\n";
  EXPECT_ANY_THROW(load_scenario(doc));
}

}  // namespace
}  // namespace commfn
