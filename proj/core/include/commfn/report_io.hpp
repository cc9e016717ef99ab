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

// Trace and report documents, in the same YAML conventions as scenarios.
//
// A trace document:
//
//   scenario: deadlock-direct-duplex
//   violation: Deadlock          # optional
//   steps:
//     - {process: 0, action: send, mech: ab, partner: 1, value: [1, 1]}
//
// A report document holds the counters and a `violations` list whose
// entries have the trace-document fields, so any entry can be replayed.

#ifndef COMMFN_REPORT_IO_HPP
#define COMMFN_REPORT_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include "commfn/action.hpp"
#include "commfn/explorer.hpp"
#include "commfn/system.hpp"
#include "commfn/violation.hpp"

namespace commfn {

struct TraceDocument {
  std::string scenario;
  std::optional<ViolationClass> violation;
  Trace trace;
};

std::string serialize_trace(const System& system, const TraceDocument& doc);

/// Accepts a trace document or a report document; for a report, the first
/// violation is taken (an empty trace if there is none). Throws ParseError.
TraceDocument parse_trace(const System& system, std::string_view document);

std::string serialize_report(const System& system,
                             const ExplorationReport& report);

/// Human-readable report.
std::string format_report(const System& system,
                          const ExplorationReport& report);

/// "P0 send ab -> P1 (1,1)" style rendering of one step.
std::string describe_choice(const System& system, const Choice& choice);

}  // namespace commfn

#endif  // COMMFN_REPORT_IO_HPP
