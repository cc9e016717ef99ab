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

#include "commfn/loader.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "yaml_util.hpp"

namespace commfn {
namespace {

using yaml::pos_of;
using yaml::require;

constexpr std::array<std::pair<StepKind, std::string_view>, 18> kStepKeys{{
    {StepKind::Write, "write"},
    {StepKind::Read, "read"},
    {StepKind::Send, "send"},
    {StepKind::Receive, "receive"},
    {StepKind::Lock, "lock"},
    {StepKind::Unlock, "unlock"},
    {StepKind::ReadWord, "read_word"},
    {StepKind::WriteWord, "write_word"},
    {StepKind::Check, "check"},
    {StepKind::Update, "update"},
    {StepKind::Loop, "loop"},
    {StepKind::IfStatus, "if_status"},
    {StepKind::AssertLocal, "assert_local"},
    {StepKind::Local, "local"},
    {StepKind::Apply, "apply"},
    {StepKind::AwaitWord, "await_word"},
    {StepKind::IfWord, "if_word"},
    {StepKind::Select, "select"},
}};

constexpr std::array<std::pair<MonitorKind, std::string_view>, 6>
    kMonitorKinds{{
        {MonitorKind::MutualExclusion, "mutual_exclusion"},
        {MonitorKind::SentReceivedOrder, "sent_received_order"},
        {MonitorKind::TornValue, "torn_value"},
        {MonitorKind::RecipientTag, "recipient_tag"},
        {MonitorKind::TerminalAssert, "terminal_assert"},
        {MonitorKind::LostUnread, "lost_unread"},
    }};

// Fields a step may carry besides its kind key.
const std::set<std::string, std::less<>> kStepFields{
    "value", "var", "index", "word", "fn",   "body",
    "full",  "empty", "then", "else", "label"};

ValueExpr parse_value_expr(const YAML::Node& n, int width) {
  ValueExpr e;
  if (n.IsSequence()) {
    e.kind = ValueExpr::Kind::Literal;
    e.literal = Value::zero(0);
    if (n.size() > static_cast<std::size_t>(kMaxWordWidth)) {
      throw ParseError(pos_of(n), "value has more than " +
                                      std::to_string(kMaxWordWidth) +
                                      " words");
    }
    for (const auto& w : n) {
      int word = yaml::as_int(w);
      if (word < 0 || word > 255) {
        throw ParseError(pos_of(w), "word out of range");
      }
      e.literal[e.literal.width] = static_cast<Word>(word);
      ++e.literal.width;
    }
    return e;
  }
  if (!n.IsScalar()) throw ParseError(pos_of(n), "expected a value");
  const std::string s = n.Scalar();
  if (yaml::is_integer(s)) {
    int word = yaml::as_int(n);
    if (word < 0 || word > 255) {
      throw ParseError(pos_of(n), "word out of range");
    }
    e.kind = ValueExpr::Kind::Literal;
    e.literal = Value::filled(width, static_cast<Word>(word));
    return e;
  }
  if (s == "empty") {
    e.kind = ValueExpr::Kind::Empty;
    return e;
  }
  e.kind = ValueExpr::Kind::Variable;
  e.var = s;
  return e;
}

WordExpr parse_word_expr(const YAML::Node& n) {
  WordExpr e;
  if (!n.IsScalar()) throw ParseError(pos_of(n), "expected a word");
  if (yaml::is_integer(n.Scalar())) {
    int word = yaml::as_int(n);
    if (word < 0 || word > 255) {
      throw ParseError(pos_of(n), "word out of range");
    }
    e.literal = static_cast<Word>(word);
  } else {
    e.is_var = true;
    e.var = n.Scalar();
  }
  return e;
}

UpdateFn parse_fn(const YAML::Node& n) {
  auto fn = parse_update_fn(yaml::as_string(n));
  if (!fn) {
    throw ParseError(pos_of(n), "unknown update function '" + n.Scalar() +
                                    "' (expected inc, double or add(k))");
  }
  return *fn;
}

Block parse_block(const YAML::Node& n, int width);

Step parse_step(const YAML::Node& n, int width) {
  if (!n.IsMap()) throw ParseError(pos_of(n), "a step must be a mapping");
  Step step;
  step.pos = pos_of(n);
  std::optional<std::pair<StepKind, YAML::Node>> head;
  for (const auto& kv : n) {
    const std::string key = kv.first.Scalar();
    auto it = std::find_if(kStepKeys.begin(), kStepKeys.end(),
                           [&](const auto& p) { return p.second == key; });
    if (it != kStepKeys.end()) {
      if (head) {
        throw ParseError(pos_of(kv.first),
                         "step has two kinds: '" +
                             std::string(to_string(head->first)) + "' and '" +
                             key + "'");
      }
      head.emplace(it->first, kv.second);
    } else if (!kStepFields.contains(key)) {
      throw ParseError(pos_of(kv.first), "unknown step field '" + key + "'");
    }
  }
  if (!head) throw ParseError(step.pos, "step has no kind");
  step.kind = head->first;
  const YAML::Node& arg = head->second;

  auto field = [&](const char* name) { return require(n, name, step.pos); };
  auto block_field = [&](const char* name) {
    return n[name] ? parse_block(n[name], width) : Block{};
  };

  switch (step.kind) {
    case StepKind::Write:
    case StepKind::Send:
      step.mech = yaml::as_string(arg);
      step.value = parse_value_expr(field("value"), width);
      break;
    case StepKind::Read:
    case StepKind::Receive:
    case StepKind::Check:
      step.mech = yaml::as_string(arg);
      step.var = yaml::as_string(field("var"));
      break;
    case StepKind::Lock:
    case StepKind::Unlock:
      step.mech = yaml::as_string(arg);
      break;
    case StepKind::ReadWord:
      step.mech = yaml::as_string(arg);
      step.index = yaml::as_int(field("index"));
      step.var = yaml::as_string(field("var"));
      break;
    case StepKind::WriteWord:
      step.mech = yaml::as_string(arg);
      step.index = yaml::as_int(field("index"));
      step.word = parse_word_expr(field("word"));
      break;
    case StepKind::AwaitWord:
      step.mech = yaml::as_string(arg);
      step.index = yaml::as_int(field("index"));
      step.word = parse_word_expr(field("word"));
      if (step.word.is_var) {
        throw ParseError(pos_of(n["word"]), "word must be a literal");
      }
      break;
    case StepKind::IfWord:
      step.mech = yaml::as_string(arg);
      step.index = yaml::as_int(field("index"));
      step.word = parse_word_expr(field("word"));
      if (step.word.is_var) {
        throw ParseError(pos_of(n["word"]), "word must be a literal");
      }
      step.body = block_field("then");
      step.otherwise = block_field("else");
      break;
    case StepKind::Update:
      step.mech = yaml::as_string(arg);
      step.fn = parse_fn(field("fn"));
      break;
    case StepKind::Loop:
      step.count = yaml::as_int(arg);
      step.body = parse_block(field("body"), width);
      break;
    case StepKind::IfStatus:
      step.mech = yaml::as_string(arg);
      step.body = block_field("full");
      step.otherwise = block_field("empty");
      break;
    case StepKind::AssertLocal:
    case StepKind::Local:
      step.var = yaml::as_string(arg);
      step.value = parse_value_expr(field("value"), width);
      break;
    case StepKind::Apply:
      step.var = yaml::as_string(arg);
      step.fn = parse_fn(field("fn"));
      break;
    case StepKind::Select:
      if (!arg.IsSequence()) {
        throw ParseError(pos_of(arg), "select takes a list of blocks");
      }
      for (const auto& alt : arg) {
        step.alternatives.push_back(parse_block(alt, width));
      }
      break;
  }
  if (n["label"]) step.label = yaml::as_string(n["label"]);
  return step;
}

Block parse_block(const YAML::Node& n, int width) {
  if (n.IsNull()) return {};
  if (!n.IsSequence()) throw ParseError(pos_of(n), "expected a list of steps");
  Block block;
  for (const auto& s : n) block.push_back(parse_step(s, width));
  return block;
}

MechanismDecl parse_mechanism(const YAML::Node& n, int width) {
  if (!n.IsMap()) throw ParseError(pos_of(n), "mechanism must be a mapping");
  MechanismDecl m;
  m.pos = pos_of(n);
  m.id = yaml::as_string(require(n, "id", m.pos));
  const auto& kind_node = require(n, "kind", m.pos);
  auto kind = parse_mechanism_kind(yaml::as_string(kind_node));
  if (!kind) {
    throw ParseError(pos_of(kind_node),
                     "unknown mechanism kind '" + kind_node.Scalar() + "'");
  }
  m.kind = *kind;
  switch (m.kind) {
    case MechanismKind::RawCell:
    case MechanismKind::SharedRegister:
      yaml::reject_unknown(n, {"id", "kind", "init"});
      break;
    case MechanismKind::LockedCell:
      yaml::reject_unknown(n, {"id", "kind", "init", "mode"});
      break;
    case MechanismKind::DuplexChannel:
      yaml::reject_unknown(n, {"id", "kind", "side_a", "side_b",
                               "last_message"});
      break;
    default:
      yaml::reject_unknown(n, {"id", "kind"});
      break;
  }
  if (n["init"]) {
    ValueExpr e = parse_value_expr(n["init"], width);
    if (e.kind != ValueExpr::Kind::Literal) {
      throw ParseError(pos_of(n["init"]), "init must be a literal value");
    }
    m.init = e.literal;
  }
  if (n["mode"]) {
    auto mode = parse_lock_mode(yaml::as_string(n["mode"]));
    if (!mode) {
      throw ParseError(pos_of(n["mode"]),
                       "mode must be encapsulated or undisciplined");
    }
    m.mode = *mode;
  }
  if (n["side_a"]) m.side_a = yaml::as_int(n["side_a"]);
  if (n["side_b"]) m.side_b = yaml::as_int(n["side_b"]);
  if (n["last_message"]) m.last_message = yaml::as_bool(n["last_message"]);
  return m;
}

MonitorSpec parse_monitor(const YAML::Node& n, int width) {
  if (!n.IsMap()) throw ParseError(pos_of(n), "monitor must be a mapping");
  MonitorSpec m;
  m.pos = pos_of(n);
  const auto& kind_node = require(n, "kind", m.pos);
  const std::string kind = yaml::as_string(kind_node);
  auto it = std::find_if(kMonitorKinds.begin(), kMonitorKinds.end(),
                         [&](const auto& p) { return p.second == kind; });
  if (it == kMonitorKinds.end()) {
    throw ParseError(pos_of(kind_node), "unknown monitor kind '" + kind + "'");
  }
  m.kind = it->first;
  switch (m.kind) {
    case MonitorKind::MutualExclusion:
      yaml::reject_unknown(n, {"kind", "name", "mech", "critical"});
      break;
    case MonitorKind::SentReceivedOrder:
      yaml::reject_unknown(n, {"kind", "name", "mech", "mode"});
      break;
    case MonitorKind::TornValue:
      yaml::reject_unknown(n, {"kind", "name", "mech", "allowed", "process"});
      break;
    case MonitorKind::TerminalAssert:
      yaml::reject_unknown(n, {"kind", "name", "mech", "process", "var",
                               "expected"});
      break;
    default:
      yaml::reject_unknown(n, {"kind", "name", "mech"});
      break;
  }
  if (n["name"]) m.name = yaml::as_string(n["name"]);
  if (n["mech"]) m.mech = yaml::as_string(n["mech"]);
  if (n["critical"]) {
    const auto& list = n["critical"];
    if (!list.IsSequence()) {
      throw ParseError(pos_of(list), "critical must be a list");
    }
    for (const auto& c : list) {
      yaml::reject_unknown(c, {"process", "enter", "exit"});
      CriticalMarkers cm;
      cm.process = yaml::as_int(require(c, "process", pos_of(c)));
      cm.enter = yaml::as_string(require(c, "enter", pos_of(c)));
      cm.exit = yaml::as_string(require(c, "exit", pos_of(c)));
      m.critical.push_back(std::move(cm));
    }
  }
  if (n["mode"]) {
    const std::string mode = yaml::as_string(n["mode"]);
    if (mode == "exact") {
      m.mode = OrderMode::Exact;
    } else if (mode == "latest") {
      m.mode = OrderMode::Latest;
    } else {
      throw ParseError(pos_of(n["mode"]), "mode must be exact or latest");
    }
  }
  if (n["allowed"]) {
    const auto& list = n["allowed"];
    if (!list.IsSequence()) {
      throw ParseError(pos_of(list), "allowed must be a list of values");
    }
    for (const auto& v : list) {
      ValueExpr e = parse_value_expr(v, width);
      if (e.kind != ValueExpr::Kind::Literal) {
        throw ParseError(pos_of(v), "allowed entries must be literals");
      }
      m.allowed.push_back(e.literal);
    }
  }
  if (n["process"]) m.process = yaml::as_int(n["process"]);
  if (n["var"]) m.var = yaml::as_string(n["var"]);
  if (m.kind == MonitorKind::TerminalAssert && !n["expected"]) {
    throw ParseError(m.pos, "terminal_assert needs 'expected'");
  }
  if (n["expected"]) {
    m.expected = parse_value_expr(n["expected"], width);
    if (m.expected.kind == ValueExpr::Kind::Variable) {
      throw ParseError(pos_of(n["expected"]),
                       "expected must be a literal or empty");
    }
  }
  return m;
}

Scenario parse_root(const YAML::Node& root) {
  if (!root.IsMap()) {
    throw ParseError(pos_of(root), "scenario document must be a mapping");
  }
  yaml::reject_unknown(root, {"name", "description", "word_width", "bounds",
                              "mechanisms", "processes", "monitors"});
  Scenario s;
  s.name = yaml::as_string(require(root, "name", pos_of(root)));
  if (root["description"]) s.description = yaml::as_string(root["description"]);
  if (root["word_width"]) s.word_width = yaml::as_int(root["word_width"]);
  if (s.word_width < 1 || s.word_width > kMaxWordWidth) {
    throw ParseError(pos_of(root["word_width"]),
                     "word_width must be in 1.." +
                         std::to_string(kMaxWordWidth));
  }
  if (root["bounds"]) {
    const auto& b = root["bounds"];
    yaml::reject_unknown(b, {"max_depth", "max_states"});
    Bounds bounds;
    if (b["max_depth"]) bounds.max_depth = yaml::as_int64(b["max_depth"]);
    if (b["max_states"]) bounds.max_states = yaml::as_int64(b["max_states"]);
    s.bounds = bounds;
  }
  if (root["mechanisms"]) {
    for (const auto& m : yaml::as_list(root["mechanisms"])) {
      s.mechanisms.push_back(parse_mechanism(m, s.word_width));
    }
  }
  if (root["processes"]) {
    int index = 0;
    for (const auto& p : yaml::as_list(root["processes"])) {
      if (!p.IsMap()) throw ParseError(pos_of(p), "process must be a mapping");
      yaml::reject_unknown(p, {"id", "name", "program"});
      ProcessDecl decl;
      decl.pos = pos_of(p);
      decl.id = p["id"] ? yaml::as_int(p["id"]) : index;
      if (p["name"]) decl.name = yaml::as_string(p["name"]);
      if (p["program"]) decl.program = parse_block(p["program"], s.word_width);
      s.processes.push_back(std::move(decl));
      ++index;
    }
  }
  if (root["monitors"]) {
    for (const auto& m : yaml::as_list(root["monitors"])) {
      s.monitors.push_back(parse_monitor(m, s.word_width));
    }
  }
  return s;
}

// Serialization.

void emit_value(YAML::Emitter& out, const Value& v) {
  out << YAML::Flow << YAML::BeginSeq;
  for (int i = 0; i < v.width; ++i) out << static_cast<int>(v[i]);
  out << YAML::EndSeq;
}

void emit_value_expr(YAML::Emitter& out, const ValueExpr& e) {
  switch (e.kind) {
    case ValueExpr::Kind::Literal:
      emit_value(out, e.literal);
      break;
    case ValueExpr::Kind::Empty:
      out << "empty";
      break;
    case ValueExpr::Kind::Variable:
      out << e.var;
      break;
  }
}

void emit_block(YAML::Emitter& out, const Block& block);

void emit_step(YAML::Emitter& out, const Step& s) {
  const bool nested = s.kind == StepKind::Loop ||
                      s.kind == StepKind::IfStatus ||
                      s.kind == StepKind::IfWord ||
                      s.kind == StepKind::Select;
  if (!nested) out << YAML::Flow;
  out << YAML::BeginMap;
  out << YAML::Key << std::string(to_string(s.kind)) << YAML::Value;
  switch (s.kind) {
    case StepKind::Write:
    case StepKind::Send:
      out << s.mech << YAML::Key << "value" << YAML::Value;
      emit_value_expr(out, s.value);
      break;
    case StepKind::Read:
    case StepKind::Receive:
    case StepKind::Check:
      out << s.mech << YAML::Key << "var" << YAML::Value << s.var;
      break;
    case StepKind::Lock:
    case StepKind::Unlock:
      out << s.mech;
      break;
    case StepKind::ReadWord:
      out << s.mech << YAML::Key << "index" << YAML::Value << s.index
          << YAML::Key << "var" << YAML::Value << s.var;
      break;
    case StepKind::WriteWord:
      out << s.mech << YAML::Key << "index" << YAML::Value << s.index
          << YAML::Key << "word" << YAML::Value;
      if (s.word.is_var) {
        out << s.word.var;
      } else {
        out << static_cast<int>(s.word.literal);
      }
      break;
    case StepKind::AwaitWord:
      out << s.mech << YAML::Key << "index" << YAML::Value << s.index
          << YAML::Key << "word" << YAML::Value
          << static_cast<int>(s.word.literal);
      break;
    case StepKind::IfWord:
      out << s.mech << YAML::Key << "index" << YAML::Value << s.index
          << YAML::Key << "word" << YAML::Value
          << static_cast<int>(s.word.literal);
      out << YAML::Key << "then" << YAML::Value;
      emit_block(out, s.body);
      out << YAML::Key << "else" << YAML::Value;
      emit_block(out, s.otherwise);
      break;
    case StepKind::Update:
      out << s.mech << YAML::Key << "fn" << YAML::Value << to_string(s.fn);
      break;
    case StepKind::Loop:
      out << s.count << YAML::Key << "body" << YAML::Value;
      emit_block(out, s.body);
      break;
    case StepKind::IfStatus:
      out << s.mech << YAML::Key << "full" << YAML::Value;
      emit_block(out, s.body);
      out << YAML::Key << "empty" << YAML::Value;
      emit_block(out, s.otherwise);
      break;
    case StepKind::AssertLocal:
    case StepKind::Local:
      out << s.var << YAML::Key << "value" << YAML::Value;
      emit_value_expr(out, s.value);
      break;
    case StepKind::Apply:
      out << s.var << YAML::Key << "fn" << YAML::Value << to_string(s.fn);
      break;
    case StepKind::Select:
      out << YAML::BeginSeq;
      for (const auto& alt : s.alternatives) emit_block(out, alt);
      out << YAML::EndSeq;
      break;
  }
  if (!s.label.empty()) {
    out << YAML::Key << "label" << YAML::Value << s.label;
  }
  out << YAML::EndMap;
}

void emit_block(YAML::Emitter& out, const Block& block) {
  if (block.empty()) {
    out << YAML::Flow << YAML::BeginSeq << YAML::EndSeq;
    return;
  }
  out << YAML::BeginSeq;
  for (const auto& s : block) emit_step(out, s);
  out << YAML::EndSeq;
}

}  // namespace

std::string_view to_string(StepKind k) {
  for (const auto& [kind, name] : kStepKeys) {
    if (kind == k) return name;
  }
  return "?";
}

std::string_view to_string(MonitorKind k) {
  for (const auto& [kind, name] : kMonitorKinds) {
    if (kind == k) return name;
  }
  return "?";
}

Scenario parse_scenario(std::string_view document) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(document));
  } catch (const YAML::Exception& e) {
    throw ParseError(SourcePos{e.mark.line + 1, e.mark.column + 1}, e.msg);
  }
  try {
    return parse_root(root);
  } catch (const YAML::Exception& e) {
    throw ParseError(SourcePos{e.mark.line + 1, e.mark.column + 1}, e.msg);
  }
}

Scenario load_scenario(std::string_view document) {
  Scenario s = parse_scenario(document);
  auto problems = validate(s);
  if (!problems.empty()) throw ValidationError(std::move(problems));
  return s;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(SourcePos{}, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_scenario(buf.str());
}

std::string serialize_scenario(const Scenario& s) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "name" << YAML::Value << s.name;
  if (!s.description.empty()) {
    out << YAML::Key << "description" << YAML::Value << s.description;
  }
  out << YAML::Key << "word_width" << YAML::Value << s.word_width;
  if (s.bounds) {
    out << YAML::Key << "bounds" << YAML::Value << YAML::Flow
        << YAML::BeginMap << YAML::Key << "max_depth" << YAML::Value
        << s.bounds->max_depth << YAML::Key << "max_states" << YAML::Value
        << s.bounds->max_states << YAML::EndMap;
  }

  out << YAML::Key << "mechanisms" << YAML::Value << YAML::BeginSeq;
  for (const auto& m : s.mechanisms) {
    out << YAML::Flow << YAML::BeginMap;
    out << YAML::Key << "id" << YAML::Value << m.id;
    out << YAML::Key << "kind" << YAML::Value
        << std::string(to_string(m.kind));
    if (m.init) {
      out << YAML::Key << "init" << YAML::Value;
      emit_value(out, *m.init);
    }
    if (m.kind == MechanismKind::LockedCell) {
      out << YAML::Key << "mode" << YAML::Value
          << std::string(to_string(m.mode));
    }
    if (m.kind == MechanismKind::DuplexChannel) {
      out << YAML::Key << "side_a" << YAML::Value << m.side_a;
      out << YAML::Key << "side_b" << YAML::Value << m.side_b;
      out << YAML::Key << "last_message" << YAML::Value << m.last_message;
    }
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;

  out << YAML::Key << "processes" << YAML::Value << YAML::BeginSeq;
  for (const auto& p : s.processes) {
    out << YAML::BeginMap;
    out << YAML::Key << "id" << YAML::Value << p.id;
    if (!p.name.empty()) out << YAML::Key << "name" << YAML::Value << p.name;
    out << YAML::Key << "program" << YAML::Value;
    emit_block(out, p.program);
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;

  out << YAML::Key << "monitors" << YAML::Value << YAML::BeginSeq;
  for (const auto& m : s.monitors) {
    out << YAML::BeginMap;
    out << YAML::Key << "kind" << YAML::Value
        << std::string(to_string(m.kind));
    if (!m.name.empty()) out << YAML::Key << "name" << YAML::Value << m.name;
    if (!m.mech.empty()) out << YAML::Key << "mech" << YAML::Value << m.mech;
    switch (m.kind) {
      case MonitorKind::MutualExclusion:
        out << YAML::Key << "critical" << YAML::Value << YAML::BeginSeq;
        for (const auto& c : m.critical) {
          out << YAML::Flow << YAML::BeginMap << YAML::Key << "process"
              << YAML::Value << c.process << YAML::Key << "enter"
              << YAML::Value << c.enter << YAML::Key << "exit" << YAML::Value
              << c.exit << YAML::EndMap;
        }
        out << YAML::EndSeq;
        break;
      case MonitorKind::SentReceivedOrder:
        out << YAML::Key << "mode" << YAML::Value
            << (m.mode == OrderMode::Exact ? "exact" : "latest");
        break;
      case MonitorKind::TornValue:
        out << YAML::Key << "allowed" << YAML::Value << YAML::Flow
            << YAML::BeginSeq;
        for (const auto& v : m.allowed) emit_value(out, v);
        out << YAML::EndSeq;
        if (m.process != kNoProcess) {
          out << YAML::Key << "process" << YAML::Value << m.process;
        }
        break;
      case MonitorKind::TerminalAssert:
        if (m.process != kNoProcess) {
          out << YAML::Key << "process" << YAML::Value << m.process;
        }
        if (!m.var.empty()) out << YAML::Key << "var" << YAML::Value << m.var;
        out << YAML::Key << "expected" << YAML::Value;
        emit_value_expr(out, m.expected);
        break;
      default:
        break;
    }
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

int unrolled_size(const Block& block) {
  int total = 0;
  for (const auto& s : block) {
    switch (s.kind) {
      case StepKind::Loop:
        total += s.count * unrolled_size(s.body);
        break;
      case StepKind::IfStatus:
      case StepKind::IfWord:
        total += 1 + unrolled_size(s.body) + unrolled_size(s.otherwise);
        break;
      case StepKind::Select:
        total += 1;
        for (const auto& alt : s.alternatives) total += unrolled_size(alt);
        break;
      default:
        total += 1;
        break;
    }
    if (total > 1'000'000) return total;  // keep absurd counts from overflowing
  }
  return total;
}

}  // namespace commfn
