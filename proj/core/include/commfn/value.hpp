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

#ifndef COMMFN_VALUE_HPP
#define COMMFN_VALUE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace commfn {

/// Words carry values in 0..kWordDomain-1.
inline constexpr int kWordDomain = 8;
inline constexpr int kMaxWordWidth = 4;
inline constexpr int kDefaultWordWidth = 2;

using Word = std::uint8_t;

/// A message: a fixed number of small words. Multi-word values are what make
/// divisible reads and writes observable.
struct Value {
  std::uint8_t width = kDefaultWordWidth;
  std::array<Word, kMaxWordWidth> words{};

  static Value zero(int width);
  static Value filled(int width, Word w);

  Word operator[](int i) const { return words[static_cast<std::size_t>(i)]; }
  Word& operator[](int i) { return words[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Value&, const Value&) = default;
  friend auto operator<=>(const Value&, const Value&) = default;
};

std::string to_string(const Value& v);

/// Observable status of a status-bearing mechanism.
enum class Status : std::uint8_t { Empty, Full, FullForA, FullForB };

std::string_view to_string(Status s);
std::optional<Status> parse_status(std::string_view s);

/// Contents of a process-local variable or of a message slot. `Empty` is the
/// distinguished "no message" indicator returned by an unwritten MessageCell.
struct Datum {
  enum class Tag : std::uint8_t { Unset, Empty, Value, Status };

  Tag tag = Tag::Unset;
  Value value{};
  Status status = Status::Empty;

  static Datum empty() { return Datum{Tag::Empty, {}, Status::Empty}; }
  static Datum of(const Value& v) { return Datum{Tag::Value, v, Status::Empty}; }
  static Datum of(Status s) { return Datum{Tag::Status, {}, s}; }

  bool is_value() const { return tag == Tag::Value; }
  bool is_empty() const { return tag == Tag::Empty; }

  friend bool operator==(const Datum&, const Datum&) = default;
  friend auto operator<=>(const Datum&, const Datum&) = default;
};

std::string to_string(const Datum& d);

/// Built-in "generate" functions, applied per word modulo the word domain.
struct UpdateFn {
  enum class Kind : std::uint8_t { Inc, Add, Double };

  Kind kind = Kind::Inc;
  Word k = 0;  // Add only

  Value apply(const Value& v) const;

  friend bool operator==(const UpdateFn&, const UpdateFn&) = default;
  friend auto operator<=>(const UpdateFn&, const UpdateFn&) = default;
};

/// Accepts "inc", "double" and "add(k)".
std::optional<UpdateFn> parse_update_fn(std::string_view name);
std::string to_string(const UpdateFn& fn);

}  // namespace commfn

#endif  // COMMFN_VALUE_HPP
