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

// Built-in scenarios, each with the exact set of violation classes that
// exhaustive exploration must report.

#ifndef COMMFN_CATALOG_HPP
#define COMMFN_CATALOG_HPP

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "commfn/explorer.hpp"
#include "commfn/scenario.hpp"
#include "commfn/violation.hpp"

namespace commfn {

struct CatalogEntry {
  std::string name;
  std::string document;  // scenario source, YAML
  Scenario scenario;     // document, loaded
  std::set<ViolationClass> expected;
  /// Second scenario compared against this one by a separate property
  /// (decomposition-equivalence only).
  std::optional<Scenario> companion;
};

/// The 14 entries, in a fixed order. Loaded once; throws if a built-in
/// document fails to load.
const std::vector<CatalogEntry>& catalog();

/// nullptr when there is no entry with that name.
const CatalogEntry* find_catalog_entry(std::string_view name);

struct CatalogCheck {
  std::string name;
  std::set<ViolationClass> expected;
  ExplorationReport report;
  double seconds = 0;

  /// Report classes equal the expected set and the search completed.
  bool passed() const;
};

CatalogCheck check_catalog_entry(const CatalogEntry& entry);

}  // namespace commfn

#endif  // COMMFN_CATALOG_HPP
