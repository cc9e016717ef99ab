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

// Small helpers over yaml-cpp that turn shape errors into ParseError with
// 1-based positions. Internal to the core library.

#ifndef COMMFN_SRC_YAML_UTIL_HPP
#define COMMFN_SRC_YAML_UTIL_HPP

#include <yaml-cpp/yaml.h>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

#include "commfn/errors.hpp"

namespace commfn::yaml {

inline SourcePos pos_of(const YAML::Node& n) {
  const YAML::Mark m = n.Mark();
  if (m.is_null()) return {};
  return SourcePos{m.line + 1, m.column + 1};
}

inline YAML::Node require(const YAML::Node& map, const char* key,
                          SourcePos where) {
  if (!map.IsMap() || !map[key]) {
    throw ParseError(where, std::string("missing field '") + key + "'");
  }
  return map[key];
}

inline bool is_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

inline std::string as_string(const YAML::Node& n) {
  if (!n.IsScalar()) throw ParseError(pos_of(n), "expected a scalar");
  return n.Scalar();
}

inline std::int64_t as_int64(const YAML::Node& n) {
  if (!n.IsScalar() || !is_integer(n.Scalar()) || n.Scalar().size() > 18) {
    throw ParseError(pos_of(n), "expected an integer");
  }
  return std::stoll(n.Scalar());
}

inline int as_int(const YAML::Node& n) {
  std::int64_t v = as_int64(n);
  if (v < -1'000'000'000 || v > 1'000'000'000) {
    throw ParseError(pos_of(n), "integer out of range");
  }
  return static_cast<int>(v);
}

inline bool as_bool(const YAML::Node& n) {
  if (n.IsScalar()) {
    const std::string& s = n.Scalar();
    if (s == "true") return true;
    if (s == "false") return false;
  }
  throw ParseError(pos_of(n), "expected true or false");
}

inline YAML::Node as_list(const YAML::Node& n) {
  if (n.IsNull()) return YAML::Node(YAML::NodeType::Sequence);
  if (!n.IsSequence()) throw ParseError(pos_of(n), "expected a list");
  return n;
}

inline void reject_unknown(const YAML::Node& map,
                           std::initializer_list<std::string_view> known) {
  if (!map.IsMap()) throw ParseError(pos_of(map), "expected a mapping");
  for (const auto& kv : map) {
    const std::string& key = kv.first.Scalar();
    bool found = false;
    for (auto k : known) found = found || k == key;
    if (!found) {
      throw ParseError(pos_of(kv.first), "unknown field '" + key + "'");
    }
  }
}

}  // namespace commfn::yaml

#endif  // COMMFN_SRC_YAML_UTIL_HPP
