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

#include "commfn/value.hpp"

#include <charconv>

namespace commfn {

Value Value::zero(int width) { return filled(width, 0); }

Value Value::filled(int width, Word w) {
  Value v;
  v.width = static_cast<std::uint8_t>(width);
  for (int i = 0; i < width; ++i) v[i] = w;
  return v;
}

std::string to_string(const Value& v) {
  std::string out = "(";
  for (int i = 0; i < v.width; ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  out += ')';
  return out;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Empty:
      return "empty";
    case Status::Full:
      return "full";
    case Status::FullForA:
      return "full_for_a";
    case Status::FullForB:
      return "full_for_b";
  }
  return "?";
}

std::optional<Status> parse_status(std::string_view s) {
  for (Status st : {Status::Empty, Status::Full, Status::FullForA,
                    Status::FullForB}) {
    if (to_string(st) == s) return st;
  }
  return std::nullopt;
}

std::string to_string(const Datum& d) {
  switch (d.tag) {
    case Datum::Tag::Unset:
      return "unset";
    case Datum::Tag::Empty:
      return "empty";
    case Datum::Tag::Value:
      return to_string(d.value);
    case Datum::Tag::Status:
      return std::string(to_string(d.status));
  }
  return "?";
}

Value UpdateFn::apply(const Value& v) const {
  Value out = v;
  for (int i = 0; i < v.width; ++i) {
    int w = v[i];
    switch (kind) {
      case Kind::Inc:
        w += 1;
        break;
      case Kind::Add:
        w += k;
        break;
      case Kind::Double:
        w *= 2;
        break;
    }
    out[i] = static_cast<Word>(w % kWordDomain);
  }
  return out;
}

std::optional<UpdateFn> parse_update_fn(std::string_view name) {
  if (name == "inc") return UpdateFn{UpdateFn::Kind::Inc, 0};
  if (name == "double") return UpdateFn{UpdateFn::Kind::Double, 0};
  constexpr std::string_view kAdd = "add(";
  if (name.starts_with(kAdd) && name.ends_with(")")) {
    auto digits = name.substr(kAdd.size(), name.size() - kAdd.size() - 1);
    int k = -1;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      return std::nullopt;
    }
    if (k < 0 || k >= kWordDomain) return std::nullopt;
    return UpdateFn{UpdateFn::Kind::Add, static_cast<Word>(k)};
  }
  return std::nullopt;
}

std::string to_string(const UpdateFn& fn) {
  switch (fn.kind) {
    case UpdateFn::Kind::Inc:
      return "inc";
    case UpdateFn::Kind::Double:
      return "double";
    case UpdateFn::Kind::Add:
      return "add(" + std::to_string(fn.k) + ")";
  }
  return "?";
}

}  // namespace commfn
