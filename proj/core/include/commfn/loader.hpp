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

// Scenario documents (YAML). See README.md for the format.

#ifndef COMMFN_LOADER_HPP
#define COMMFN_LOADER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "commfn/errors.hpp"
#include "commfn/scenario.hpp"

namespace commfn {

/// Parses and validates. Throws ParseError for malformed documents and
/// ValidationError for static errors; both carry line:column positions.
Scenario load_scenario(std::string_view document);
Scenario load_scenario_file(const std::string& path);

/// Parses without static validation.
Scenario parse_scenario(std::string_view document);

/// Every static problem in the scenario; empty when it is valid.
std::vector<Diagnostic> validate(const Scenario& scenario);

/// Canonical document: fixed field order, literals as explicit word lists.
/// `load_scenario(serialize_scenario(s)) == s` for any valid `s`.
std::string serialize_scenario(const Scenario& scenario);

/// Steps a block expands to once loops are unrolled.
int unrolled_size(const Block& block);

}  // namespace commfn

#endif  // COMMFN_LOADER_HPP
