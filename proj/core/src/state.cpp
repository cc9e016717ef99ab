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

#include "commfn/state.hpp"

#include <algorithm>
#include <cstdio>

namespace commfn {
namespace {

void put(std::string& out, std::uint8_t b) { out.push_back(static_cast<char>(b)); }

void put_pid(std::string& out, ProcessId p) {
  put(out, static_cast<std::uint8_t>(p + 1));
}

void put_value(std::string& out, const Value& v) {
  put(out, v.width);
  for (int i = 0; i < v.width; ++i) put(out, v[i]);
}

void put_datum(std::string& out, const Datum& d) {
  put(out, static_cast<std::uint8_t>(d.tag));
  switch (d.tag) {
    case Datum::Tag::Value:
      put_value(out, d.value);
      break;
    case Datum::Tag::Status:
      put(out, static_cast<std::uint8_t>(d.status));
      break;
    default:
      break;
  }
}

struct MechanismEncoder {
  std::string& out;

  void operator()(const RawCell& c) { put_value(out, c.words); }
  void operator()(const LockedCell& c) {
    put_pid(out, c.owner);
    put_value(out, c.words);
    put(out, static_cast<std::uint8_t>(c.mode));
  }
  void operator()(const MessageCell& c) { put_datum(out, c.content); }
  void operator()(const StatusChannel& c) {
    put(out, static_cast<std::uint8_t>(c.status));
    put_datum(out, c.content);
  }
  void operator()(const DuplexChannel& c) {
    put(out, static_cast<std::uint8_t>(c.status));
    put_datum(out, c.content);
    put_pid(out, c.side_a);
    put_pid(out, c.side_b);
    put(out, c.last_message ? 1 : 0);
  }
  void operator()(const LastMessageChannel& c) {
    put(out, static_cast<std::uint8_t>(c.status));
    put_datum(out, c.content);
  }
  void operator()(const SharedRegister& r) {
    put_value(out, r.content);
    put_pid(out, r.owner);
  }
  void operator()(const DirectChannel&) {}
};

}  // namespace

bool GlobalState::all_terminated() const {
  return std::all_of(processes.begin(), processes.end(),
                     [](const ProcessState& p) { return p.terminated(); });
}

// Every field is written with a fixed or self-describing length, so the
// encoding is injective.
std::string GlobalState::encode() const {
  std::string out;
  out.reserve(64);
  put(out, static_cast<std::uint8_t>(mechanisms.size()));
  for (const auto& m : mechanisms) {
    put(out, static_cast<std::uint8_t>(m.index()));
    std::visit(MechanismEncoder{out}, m);
  }
  put(out, static_cast<std::uint8_t>(processes.size()));
  for (const auto& p : processes) {
    auto pc = static_cast<std::uint16_t>(p.pc);
    put(out, static_cast<std::uint8_t>(pc & 0xff));
    put(out, static_cast<std::uint8_t>(pc >> 8));
    for (const auto& d : p.locals) put_datum(out, d);
  }
  put(out, static_cast<std::uint8_t>(ghost.size()));
  for (const auto& g : ghost) {
    put(out, static_cast<std::uint8_t>(g.size() & 0xff));
    put(out, static_cast<std::uint8_t>(g.size() >> 8));
    out.append(g.begin(), g.end());
  }
  return out;
}

std::uint64_t GlobalState::hash() const { return fnv1a64(encode()); }

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string format_hash(std::uint64_t h) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace commfn
