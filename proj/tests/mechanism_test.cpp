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

#include "commfn/mechanism.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

namespace commfn {
namespace {

ActionLabel act(ActionKind k) { return ActionLabel{k, 0, 0, {}, {}}; }

ActionLabel write(int v) {
  ActionLabel a = act(ActionKind::Write);
  a.value = Datum::of(Value::filled(1, static_cast<Word>(v)));
  return a;
}

ActionLabel write_empty() {
  ActionLabel a = act(ActionKind::Write);
  a.value = Datum::empty();
  return a;
}

ActionLabel write_word(int index, int word) {
  ActionLabel a = act(ActionKind::WriteWord);
  a.index = static_cast<std::uint8_t>(index);
  a.word = static_cast<Word>(word);
  return a;
}

Datum val(int v) { return Datum::of(Value::filled(1, static_cast<Word>(v))); }

TEST(RawCellTest, WordAccessIsAlwaysEnabled) {
  MechanismState m = RawCell{Value::zero(2)};
  EXPECT_TRUE(is_enabled(m, 0, write_word(1, 5)));
  m = apply_action(m, 0, write_word(1, 5)).next;
  ActionLabel r = act(ActionKind::ReadWord);
  r.index = 1;
  EXPECT_EQ(apply_action(m, 3, r).observed.value[0], 5);
  EXPECT_FALSE(is_enabled(m, 0, write(1)));
}

TEST(LockedCellTest, EncapsulatedRestrictsAccessToOwner) {
  MechanismState m = LockedCell{kNoProcess, Value::zero(1),
                                LockMode::Encapsulated};
  EXPECT_FALSE(is_enabled(m, 0, write_word(0, 1)));
  EXPECT_FALSE(is_enabled(m, 0, act(ActionKind::Unlock)));
  m = apply_action(m, 0, act(ActionKind::Lock)).next;
  EXPECT_TRUE(is_enabled(m, 0, write_word(0, 1)));
  EXPECT_FALSE(is_enabled(m, 1, write_word(0, 1)));
  EXPECT_FALSE(is_enabled(m, 1, act(ActionKind::Lock)));
  EXPECT_FALSE(is_enabled(m, 1, act(ActionKind::Unlock)));
  m = apply_action(m, 0, act(ActionKind::Unlock)).next;
  EXPECT_TRUE(is_enabled(m, 1, act(ActionKind::Lock)));
}

TEST(LockedCellTest, UndisciplinedLetsAnyoneIn) {
  MechanismState m = LockedCell{0, Value::zero(1), LockMode::Undisciplined};
  EXPECT_TRUE(is_enabled(m, 1, write_word(0, 1)));
  EXPECT_FALSE(is_enabled(m, 1, act(ActionKind::Lock)));
}

TEST(MessageCellTest, ReadsAreNonDestructive) {
  MechanismState m = MessageCell{};
  EXPECT_EQ(apply_action(m, 1, act(ActionKind::Read)).observed,
            Datum::empty());
  m = apply_action(m, 0, write(4)).next;
  m = apply_action(m, 0, write(5)).next;
  const auto r = apply_action(m, 1, act(ActionKind::Read));
  EXPECT_EQ(r.observed, val(5));
  EXPECT_EQ(r.next, m);
  EXPECT_TRUE(is_enabled(m, 0, write_empty()));
}

TEST(StatusChannelTest, WriteNeedsEmptyReadNeedsFull) {
  MechanismState m = StatusChannel{};
  EXPECT_FALSE(is_enabled(m, 1, act(ActionKind::Read)));
  EXPECT_FALSE(is_enabled(m, 0, write_empty()));
  m = apply_action(m, 0, write(2)).next;
  EXPECT_FALSE(is_enabled(m, 0, write(3)));
  EXPECT_EQ(apply_action(m, 1, act(ActionKind::CheckStatus)).observed,
            Datum::of(Status::Full));
  const auto r = apply_action(m, 1, act(ActionKind::Read));
  EXPECT_EQ(r.observed, val(2));
  EXPECT_EQ(r.next, MechanismState{StatusChannel{}});
}

TEST(DuplexChannelTest, StrictModeTracksRecipient) {
  MechanismState m = DuplexChannel{Status::Empty, Datum::empty(), 0, 1, false};
  EXPECT_FALSE(is_enabled(m, 0, act(ActionKind::Read)));
  m = apply_action(m, 0, write(1)).next;
  EXPECT_EQ(std::get<DuplexChannel>(m).status, Status::FullForB);
  EXPECT_FALSE(is_enabled(m, 0, act(ActionKind::Read)));
  EXPECT_FALSE(is_enabled(m, 1, write(2)));
  EXPECT_FALSE(is_enabled(m, 0, write(2)));
  EXPECT_TRUE(is_enabled(m, 1, act(ActionKind::Read)));
  m = apply_action(m, 1, act(ActionKind::Read)).next;
  m = apply_action(m, 1, write(2)).next;
  EXPECT_EQ(std::get<DuplexChannel>(m).status, Status::FullForA);
}

TEST(DuplexChannelTest, LastMessageModeOverwritesOnlyOutgoing) {
  MechanismState m = DuplexChannel{Status::Empty, Datum::empty(), 0, 1, true};
  m = apply_action(m, 0, write(1)).next;
  EXPECT_TRUE(is_enabled(m, 0, write(2)));
  EXPECT_FALSE(is_enabled(m, 1, write(3)));
  m = apply_action(m, 0, write(2)).next;
  EXPECT_EQ(apply_action(m, 1, act(ActionKind::Read)).observed, val(2));
}

TEST(LastMessageChannelTest, WritesOverwriteReadsEmpty) {
  MechanismState m = LastMessageChannel{};
  m = apply_action(m, 0, write(1)).next;
  m = apply_action(m, 0, write(2)).next;
  const auto r = apply_action(m, 1, act(ActionKind::Read));
  EXPECT_EQ(r.observed, val(2));
  EXPECT_FALSE(is_enabled(r.next, 1, act(ActionKind::Read)));
}

TEST(SharedRegisterTest, UpdateIsAtomicAndLockExcludesOthers) {
  MechanismState m = SharedRegister{Value::zero(1), kNoProcess};
  ActionLabel inc = act(ActionKind::Update);
  inc.fn = UpdateFn{UpdateFn::Kind::Inc, 0};
  m = apply_action(m, 0, inc).next;
  m = apply_action(m, 1, inc).next;
  EXPECT_EQ(content_of(m), val(2));
  m = apply_action(m, 0, act(ActionKind::Lock)).next;
  EXPECT_FALSE(is_enabled(m, 1, inc));
  EXPECT_FALSE(is_enabled(m, 1, act(ActionKind::Read)));
  EXPECT_TRUE(is_enabled(m, 0, write(7)));
}

TEST(DirectChannelTest, NeverEnabledAlone) {
  const MechanismState m = DirectChannel{};
  EXPECT_FALSE(is_enabled(m, 0, act(ActionKind::Send)));
  EXPECT_FALSE(is_enabled(m, 0, act(ActionKind::Receive)));
}

TEST(MechanismTest, ApplyingDisabledActionThrows) {
  EXPECT_THROW(apply_action(StatusChannel{}, 0, act(ActionKind::Read)),
               std::logic_error);
}

TEST(MechanismTest, SupportTable) {
  EXPECT_TRUE(supports(MechanismKind::RawCell, ActionKind::ReadWord));
  EXPECT_FALSE(supports(MechanismKind::RawCell, ActionKind::Read));
  EXPECT_FALSE(supports(MechanismKind::MessageCell, ActionKind::CheckStatus));
  EXPECT_TRUE(supports(MechanismKind::SharedRegister, ActionKind::Update));
  EXPECT_TRUE(supports(MechanismKind::DirectChannel, ActionKind::Send));
  EXPECT_FALSE(supports(MechanismKind::DirectChannel, ActionKind::Write));
}

TEST(MechanismTest, KindNamesRoundTrip) {
  for (int k = 0; k <= static_cast<int>(MechanismKind::DirectChannel); ++k) {
    const auto kind = static_cast<MechanismKind>(k);
    EXPECT_EQ(parse_mechanism_kind(to_string(kind)), kind);
  }
  EXPECT_FALSE(parse_mechanism_kind("mailbox"));
}

}  // namespace
}  // namespace commfn
