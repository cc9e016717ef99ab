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

// Command-line front end. Exit codes: 0 no violations, 1 violations found
// (or a recorded violation not reproduced), 2 bounds exceeded without
// violations, 3 load, validation or stale-trace error.

#include <yaml-cpp/yaml.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commfn/catalog.hpp"
#include "commfn/errors.hpp"
#include "commfn/explorer.hpp"
#include "commfn/kernel.hpp"
#include "commfn/loader.hpp"
#include "commfn/mechanism.hpp"
#include "commfn/report_io.hpp"
#include "commfn/system.hpp"

namespace {

using namespace commfn;

constexpr int kExitClean = 0;
constexpr int kExitViolations = 1;
constexpr int kExitBounds = 2;
constexpr int kExitInput = 3;

struct Options {
  std::string catalog_name;
  std::string file;
  std::string format = "text";
  std::optional<int> max_depth;
  std::optional<int> max_states;
  std::string schedule;
  std::string only;
};

/// Raised for bad input; carries the message printed before exiting 3.
struct InputError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

System resolve_system(const Options& o) {
  try {
    if (!o.catalog_name.empty()) {
      const CatalogEntry* e = find_catalog_entry(o.catalog_name);
      if (e == nullptr) {
        throw InputError{"no catalog scenario named '" + o.catalog_name + "'"};
      }
      return System::compile(e->scenario);
    }
    return System::compile(load_scenario(read_file(o.file)));
  } catch (const ParseError& e) {
    throw InputError{o.file + ":" + e.what()};
  } catch (const ValidationError& e) {
    std::string msg;
    for (const auto& d : e.diagnostics()) {
      msg += o.file + ":" + to_string(d) + "\n";
    }
    if (!msg.empty()) msg.pop_back();
    throw InputError{msg};
  }
}

Bounds resolve_bounds(const System& sys, const Options& o) {
  Bounds b = sys.bounds();
  if (o.max_depth) b.max_depth = *o.max_depth;
  if (o.max_states) b.max_states = *o.max_states;
  return b;
}

TraceDocument resolve_trace(const System& sys, const Options& o) {
  try {
    return parse_trace(sys, read_file(o.schedule));
  } catch (const ParseError& e) {
    throw InputError{o.schedule + ":" + e.what()};
  }
}

int cmd_explore(const Options& o) {
  const System sys = resolve_system(o);
  const ExplorationReport report = explore(sys, resolve_bounds(sys, o));
  std::cout << (o.format == "structured" ? serialize_report(sys, report)
                                         : format_report(sys, report));
  if (!report.violations.empty()) return kExitViolations;
  return report.bounds_hit ? kExitBounds : kExitClean;
}

/// Replays the schedule. Throws InputError naming the first step that is
/// not enabled.
ReplayRecord replay_or_fail(const System& sys, const TraceDocument& doc) {
  try {
    return replay_recorded(sys, doc.trace);
  } catch (const NotEnabledAtStep& e) {
    throw InputError{"stale trace: step " + std::to_string(e.index()) +
                     " is not enabled: " + e.what()};
  }
}

std::vector<ViolationClass> all_violations(const ReplayRecord& rec) {
  std::set<ViolationClass> seen;
  std::vector<ViolationClass> out;
  auto add = [&](const ViolationClass& v) {
    if (seen.insert(v).second) out.push_back(v);
  };
  for (const auto& hits : rec.hits) {
    for (const auto& v : hits) add(v);
  }
  for (const auto& v : rec.final_violations) add(v);
  return out;
}

std::string describe_state(const System& sys, const GlobalState& s) {
  std::string out;
  for (MechanismIndex m = 0; m < sys.mechanism_count(); ++m) {
    if (!out.empty()) out += ", ";
    out += sys.mechanism_id(m) + "=" +
           describe(s.mechanisms[static_cast<std::size_t>(m)]);
  }
  return out;
}

std::string describe_mech(const System& sys, const Choice& c,
                          const GlobalState& s) {
  if (c.mech == kNoMechanism) return "-";
  return describe(s.mechanisms[static_cast<std::size_t>(c.mech)]);
}

int cmd_run(const Options& o) {
  const System sys = resolve_system(o);
  const TraceDocument doc = resolve_trace(sys, o);
  const ReplayRecord rec = replay_or_fail(sys, doc);
  const auto violations = all_violations(rec);
  if (o.format == "structured") {
    YAML::Emitter out;
    out << YAML::BeginMap;
    out << YAML::Key << "scenario" << YAML::Value << sys.name();
    out << YAML::Key << "steps" << YAML::Value << doc.trace.size();
    out << YAML::Key << "state_hash" << YAML::Value
        << format_hash(rec.final_state.hash());
    out << YAML::Key << "terminated" << YAML::Value
        << rec.final_state.all_terminated();
    out << YAML::Key << "violations" << YAML::Value << YAML::Flow
        << YAML::BeginSeq;
    for (const auto& v : violations) out << to_string(v);
    out << YAML::EndSeq << YAML::EndMap;
    std::cout << out.c_str() << "\n";
  } else {
    std::cout << "scenario: " << sys.name() << "\n"
              << "steps: " << doc.trace.size() << "\n"
              << "final state: " << describe_state(sys, rec.final_state)
              << "\n"
              << "terminated: "
              << (rec.final_state.all_terminated() ? "yes" : "no") << "\n"
              << "violations: " << violations.size() << "\n";
    for (const auto& v : violations) std::cout << "  " << to_string(v) << "\n";
  }
  return violations.empty() ? kExitClean : kExitViolations;
}

int cmd_replay(const Options& o) {
  const System sys = resolve_system(o);
  const TraceDocument doc = resolve_trace(sys, o);
  const ReplayRecord rec = replay_or_fail(sys, doc);
  const GlobalState init = sys.initial_state();
  const bool confirmed =
      !doc.violation || reproduces(sys, doc.trace, *doc.violation);

  if (o.format == "structured") {
    YAML::Emitter out;
    out << YAML::BeginMap;
    out << YAML::Key << "scenario" << YAML::Value << sys.name();
    out << YAML::Key << "initial" << YAML::Value << describe_state(sys, init);
    out << YAML::Key << "steps" << YAML::Value << YAML::BeginSeq;
    for (std::size_t i = 0; i < doc.trace.size(); ++i) {
      const Choice& c = doc.trace[i];
      out << YAML::Flow << YAML::BeginMap;
      out << YAML::Key << "index" << YAML::Value << i;
      out << YAML::Key << "process" << YAML::Value << c.process;
      out << YAML::Key << "action" << YAML::Value << to_string(c.action);
      out << YAML::Key << "mech" << YAML::Value
          << (c.mech == kNoMechanism ? std::string("-")
                                     : sys.mechanism_id(c.mech));
      out << YAML::Key << "state" << YAML::Value
          << describe_mech(sys, c, rec.states[i]);
      out << YAML::EndMap;
    }
    out << YAML::EndSeq;
    if (doc.violation) {
      out << YAML::Key << "violation" << YAML::Value
          << to_string(*doc.violation);
      out << YAML::Key << "confirmed" << YAML::Value << confirmed;
    }
    out << YAML::EndMap;
    std::cout << out.c_str() << "\n";
  } else {
    std::cout << "scenario: " << sys.name() << "\n"
              << "initial: " << describe_state(sys, init) << "\n";
    for (std::size_t i = 0; i < doc.trace.size(); ++i) {
      const Choice& c = doc.trace[i];
      std::cout << i << ": " << describe_choice(sys, c) << "  => "
                << describe_mech(sys, c, rec.states[i]) << "\n";
    }
    if (doc.violation) {
      std::cout << to_string(*doc.violation)
                << (confirmed ? " confirmed" : " NOT reproduced") << "\n";
    }
  }
  return confirmed ? kExitClean : kExitViolations;
}

std::string join_classes(const std::set<ViolationClass>& classes) {
  if (classes.empty()) return "none";
  std::string out;
  for (const auto& c : classes) {
    if (!out.empty()) out += ",";
    out += to_string(c);
  }
  return out;
}

int cmd_list(const Options& o) {
  if (o.format == "structured") {
    YAML::Emitter out;
    out << YAML::BeginSeq;
    for (const auto& e : catalog()) {
      out << YAML::Flow << YAML::BeginMap << YAML::Key << "name"
          << YAML::Value << e.name << YAML::Key << "expected" << YAML::Value
          << join_classes(e.expected) << YAML::EndMap;
    }
    out << YAML::EndSeq;
    std::cout << out.c_str() << "\n";
    return kExitClean;
  }
  for (const auto& e : catalog()) {
    std::printf("%-28s expect %s\n", e.name.c_str(),
                join_classes(e.expected).c_str());
  }
  return kExitClean;
}

int cmd_catalog_check(const Options& o) {
  if (!o.only.empty() && find_catalog_entry(o.only) == nullptr) {
    throw InputError{"no catalog scenario named '" + o.only + "'"};
  }
  bool all = true;
  YAML::Emitter out;
  const bool structured = o.format == "structured";
  if (structured) {
    out << YAML::BeginSeq;
  } else {
    std::printf("%-28s %-6s %9s %8s  %s\n", "scenario", "result", "states",
                "seconds", "found");
  }
  for (const auto& e : catalog()) {
    if (!o.only.empty() && e.name != o.only) continue;
    const CatalogCheck c = check_catalog_entry(e);
    all = all && c.passed();
    const std::string found = join_classes(c.report.classes());
    if (structured) {
      out << YAML::Flow << YAML::BeginMap;
      out << YAML::Key << "name" << YAML::Value << c.name;
      out << YAML::Key << "passed" << YAML::Value << c.passed();
      out << YAML::Key << "states" << YAML::Value << c.report.states_visited;
      out << YAML::Key << "expected" << YAML::Value
          << join_classes(c.expected);
      out << YAML::Key << "found" << YAML::Value << found;
      out << YAML::EndMap;
    } else {
      std::printf("%-28s %-6s %9llu %8.3f  %s\n", c.name.c_str(),
                  c.passed() ? "pass" : "FAIL",
                  static_cast<unsigned long long>(c.report.states_visited),
                  c.seconds, found.c_str());
    }
  }
  if (structured) {
    out << YAML::EndSeq;
    std::cout << out.c_str() << "\n";
  }
  return all ? kExitClean : kExitViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explore interleavings of communicating processes."};
  app.require_subcommand(1);
  Options o;

  auto add_source = [&](CLI::App* cmd) {
    auto* cat = cmd->add_option("--catalog", o.catalog_name,
                                "Built-in scenario name");
    auto* file = cmd->add_option("--file", o.file, "Scenario file");
    cat->excludes(file);
    file->excludes(cat);
    cmd->callback([cmd, cat, file] {
      if (cat->count() + file->count() != 1) {
        throw CLI::RequiredError(cmd->get_name() +
                                 " needs --catalog or --file");
      }
    });
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  auto* explore_cmd = app.add_subcommand("explore", "Explore all schedules");
  add_source(explore_cmd);
  add_format(explore_cmd);
  explore_cmd->add_option("--max-depth", o.max_depth, "Depth bound")
      ->check(CLI::PositiveNumber);
  explore_cmd->add_option("--max-states", o.max_states, "State bound")
      ->check(CLI::PositiveNumber);

  auto* run_cmd = app.add_subcommand("run", "Execute one schedule");
  add_source(run_cmd);
  add_format(run_cmd);
  run_cmd->add_option("--schedule", o.schedule, "Trace document")
      ->required();

  auto* replay_cmd =
      app.add_subcommand("replay", "Replay a trace step by step");
  add_source(replay_cmd);
  add_format(replay_cmd);
  replay_cmd->add_option("--schedule", o.schedule, "Trace document")
      ->required();

  auto* list_cmd = app.add_subcommand("list", "List catalog scenarios");
  add_format(list_cmd);

  auto* check_cmd = app.add_subcommand(
      "catalog-check", "Check every catalog scenario against its expectation");
  add_format(check_cmd);
  check_cmd->add_option("--only", o.only, "Check a single scenario");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitClean : kExitInput;
  }

  try {
    if (explore_cmd->parsed()) return cmd_explore(o);
    if (run_cmd->parsed()) return cmd_run(o);
    if (replay_cmd->parsed()) return cmd_replay(o);
    if (list_cmd->parsed()) return cmd_list(o);
    return cmd_catalog_check(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitInput;
  }
}
