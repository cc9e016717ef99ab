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

#include <yaml-cpp/yaml.h>

#include <sstream>

#include "commfn/errors.hpp"
#include "commfn/state.hpp"
#include "yaml_util.hpp"

namespace commfn {
namespace {

bool has_value(ActionKind k) {
  return k == ActionKind::Write || k == ActionKind::Send;
}

bool has_index(ActionKind k) {
  return k == ActionKind::ReadWord || k == ActionKind::WriteWord;
}

void emit_datum(YAML::Emitter& out, const Datum& d) {
  if (!d.is_value()) {
    out << "empty";
    return;
  }
  out << YAML::Flow << YAML::BeginSeq;
  for (int i = 0; i < d.value.width; ++i) out << static_cast<int>(d.value[i]);
  out << YAML::EndSeq;
}

void emit_steps(YAML::Emitter& out, const System& sys, const Trace& trace) {
  out << YAML::Key << "steps" << YAML::Value << YAML::BeginSeq;
  for (const Choice& c : trace) {
    const ActionLabel& a = c.action;
    out << YAML::Flow << YAML::BeginMap;
    out << YAML::Key << "process" << YAML::Value << c.process;
    out << YAML::Key << "action" << YAML::Value << std::string(to_string(a.kind));
    if (c.mech != kNoMechanism) {
      out << YAML::Key << "mech" << YAML::Value << sys.mechanism_id(c.mech);
    }
    if (c.partner != kNoProcess) {
      out << YAML::Key << "partner" << YAML::Value << c.partner;
    }
    if (has_value(a.kind)) {
      out << YAML::Key << "value" << YAML::Value;
      emit_datum(out, a.value);
    }
    if (has_index(a.kind)) {
      out << YAML::Key << "index" << YAML::Value << static_cast<int>(a.index);
    }
    if (a.kind == ActionKind::WriteWord) {
      out << YAML::Key << "word" << YAML::Value << static_cast<int>(a.word);
    }
    if (a.kind == ActionKind::Update) {
      out << YAML::Key << "fn" << YAML::Value << to_string(a.fn);
    }
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
}

int in_range(const YAML::Node& n, int lo, int hi, const char* what) {
  const int v = yaml::as_int(n);
  if (v < lo || v > hi) {
    throw ParseError(yaml::pos_of(n), std::string(what) + " out of range");
  }
  return v;
}

Choice parse_step(const System& sys, const YAML::Node& n) {
  yaml::reject_unknown(n, {"process", "action", "mech", "partner", "value",
                           "index", "word", "fn"});
  const SourcePos pos = yaml::pos_of(n);
  Choice c;
  c.process = in_range(yaml::require(n, "process", pos), 0,
                       sys.process_count() - 1, "process");
  const YAML::Node action = yaml::require(n, "action", pos);
  const auto kind = parse_action_kind(yaml::as_string(action));
  if (!kind) throw ParseError(yaml::pos_of(action), "unknown action");
  c.action.kind = *kind;
  if (n["mech"]) {
    c.mech = sys.mechanism_index(yaml::as_string(n["mech"]));
    if (c.mech == kNoMechanism) {
      throw ParseError(yaml::pos_of(n["mech"]),
                       "unknown mechanism '" + n["mech"].Scalar() + "'");
    }
  }
  if (n["partner"]) {
    c.partner = in_range(n["partner"], 0, sys.process_count() - 1, "partner");
  }
  if (const YAML::Node v = n["value"]) {
    if (v.IsScalar() && v.Scalar() == "empty") {
      c.action.value = Datum::empty();
    } else {
      const YAML::Node list = yaml::as_list(v);
      if (static_cast<int>(list.size()) != sys.word_width()) {
        throw ParseError(yaml::pos_of(v), "value has the wrong width");
      }
      Value value = Value::zero(sys.word_width());
      for (int i = 0; i < value.width; ++i) {
        value[i] = static_cast<Word>(
            in_range(list[static_cast<std::size_t>(i)], 0, kWordDomain - 1,
                     "word"));
      }
      c.action.value = Datum::of(value);
    }
  }
  if (n["index"]) {
    c.action.index = static_cast<std::uint8_t>(
        in_range(n["index"], 0, sys.word_width() - 1, "index"));
  }
  if (n["word"]) {
    c.action.word =
        static_cast<Word>(in_range(n["word"], 0, kWordDomain - 1, "word"));
  }
  if (n["fn"]) {
    const auto fn = parse_update_fn(yaml::as_string(n["fn"]));
    if (!fn) throw ParseError(yaml::pos_of(n["fn"]), "unknown update function");
    c.action.fn = *fn;
  }
  return c;
}

TraceDocument parse_entry(const System& sys, const YAML::Node& n,
                          const std::string& scenario) {
  TraceDocument doc;
  doc.scenario = scenario;
  if (n["violation"]) {
    doc.violation = parse_violation_class(yaml::as_string(n["violation"]));
    if (!doc.violation) {
      throw ParseError(yaml::pos_of(n["violation"]), "unknown violation class");
    }
  }
  for (const auto& step : yaml::as_list(n["steps"])) {
    doc.trace.push_back(parse_step(sys, step));
  }
  return doc;
}

std::string schedules_text(const ExplorationReport& r) {
  return r.schedules_complete ? std::to_string(*r.schedules_complete)
                              : std::string("unknown");
}

}  // namespace

std::string serialize_trace(const System& system, const TraceDocument& doc) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "scenario" << YAML::Value << doc.scenario;
  if (doc.violation) {
    out << YAML::Key << "violation" << YAML::Value << to_string(*doc.violation);
  }
  emit_steps(out, system, doc.trace);
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

TraceDocument parse_trace(const System& system, std::string_view document) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(document));
  } catch (const YAML::ParserException& e) {
    throw ParseError(SourcePos{e.mark.line + 1, e.mark.column + 1}, e.msg);
  }
  if (!root.IsMap()) throw ParseError(yaml::pos_of(root), "expected a mapping");
  const std::string scenario =
      root["scenario"] ? yaml::as_string(root["scenario"]) : std::string();
  if (root["violations"]) {
    const YAML::Node list = yaml::as_list(root["violations"]);
    if (list.size() == 0) return TraceDocument{scenario, std::nullopt, {}};
    return parse_entry(system, list[0], scenario);
  }
  yaml::reject_unknown(root, {"scenario", "violation", "steps"});
  return parse_entry(system, root, scenario);
}

std::string serialize_report(const System& system,
                             const ExplorationReport& report) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "scenario" << YAML::Value << system.name();
  out << YAML::Key << "states_visited" << YAML::Value << report.states_visited;
  out << YAML::Key << "distinct_terminal_states" << YAML::Value
      << report.distinct_terminal_states;
  out << YAML::Key << "deadlock_states" << YAML::Value
      << report.deadlock_states;
  out << YAML::Key << "schedules_complete" << YAML::Value
      << schedules_text(report);
  out << YAML::Key << "bounds_hit" << YAML::Value << report.bounds_hit;
  out << YAML::Key << "violations" << YAML::Value << YAML::BeginSeq;
  for (const Violation& v : report.violations) {
    out << YAML::BeginMap;
    out << YAML::Key << "violation" << YAML::Value << to_string(v.cls);
    out << YAML::Key << "state_hash" << YAML::Value
        << format_hash(v.state_hash);
    out << YAML::Key << "occurrences" << YAML::Value << v.occurrences;
    emit_steps(out, system, v.trace);
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

std::string format_report(const System& system,
                          const ExplorationReport& report) {
  std::ostringstream out;
  out << "scenario: " << system.name() << "\n"
      << "states visited: " << report.states_visited << "\n"
      << "terminal states: " << report.distinct_terminal_states << "\n"
      << "deadlock states: " << report.deadlock_states << "\n"
      << "complete schedules: " << schedules_text(report) << "\n"
      << "bounds hit: " << (report.bounds_hit ? "yes" : "no") << "\n"
      << "violations: " << report.violations.size() << "\n";
  for (const Violation& v : report.violations) {
    out << "\n" << to_string(v.cls) << "  (" << v.occurrences
        << " states, first at " << format_hash(v.state_hash) << ")\n";
    for (std::size_t i = 0; i < v.trace.size(); ++i) {
      out << "  " << i << ": " << describe_choice(system, v.trace[i]) << "\n";
    }
  }
  return out.str();
}

std::string describe_choice(const System& system, const Choice& c) {
  std::string out = "P" + std::to_string(c.process) + " " + to_string(c.action);
  if (c.mech != kNoMechanism) out += " @" + system.mechanism_id(c.mech);
  if (c.partner != kNoProcess) out += " -> P" + std::to_string(c.partner);
  return out;
}

}  // namespace commfn
