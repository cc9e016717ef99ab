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

#include "commfn/explorer.hpp"

#include <deque>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "commfn/kernel.hpp"

namespace commfn {
namespace {

using Count = std::optional<std::uint64_t>;

Count add(Count a, Count b) {
  if (!a || !b) return std::nullopt;
  if (*a > UINT64_MAX - *b) return std::nullopt;
  return *a + *b;
}

// Program counters only move forward, so the state graph is a DAG and the
// schedule count is a plain sum over successors.
class Dfs {
 public:
  Dfs(const System& sys, const Bounds& bounds, const ExploreOptions& options)
      : sys_(sys), bounds_(bounds), options_(options) {}

  ExplorationReport run() {
    GlobalState init = sys_.initial_state();
    std::string key = init.encode();
    visited_.emplace(key, Count{0});
    Count total = visit(init, 0);
    visited_[key] = total;

    report_.states_visited = visited_.size();
    report_.schedules_complete = report_.bounds_hit ? std::nullopt : total;
    for (auto& [cls, v] : found_) report_.violations.push_back(std::move(v));
    return std::move(report_);
  }

 private:
  void record(const ViolationClass& cls, std::uint64_t hash) {
    auto [it, inserted] = found_.try_emplace(cls);
    if (inserted) {
      it->second.cls = cls;
      it->second.trace = path_;
      it->second.state_hash = hash;
    }
    if (occurrences_.emplace(cls, hash).second) ++it->second.occurrences;
  }

  Count visit(const GlobalState& s, int depth) {
    if (options_.on_state) options_.on_state(s);
    const std::uint64_t hash = s.hash();
    for (const auto& v : state_violations(sys_, s)) record(v, hash);
    if (s.all_terminated()) {
      ++report_.distinct_terminal_states;
      return 1;
    }
    const auto enabled = enabled_actions(sys_, s);
    if (enabled.empty()) {
      ++report_.deadlock_states;
      return 1;
    }
    if (depth >= bounds_.max_depth) {
      report_.bounds_hit = true;
      return std::nullopt;
    }
    Count sum = 0;
    for (const Choice& c : enabled) {
      StepOutcome out = advance_unchecked(sys_, s, c);
      path_.push_back(c);
      if (!out.hits.empty()) {
        const std::uint64_t h = out.state.hash();
        for (const auto& v : out.hits) record(v, h);
      }
      std::string key = out.state.encode();
      Count sub;
      if (auto it = visited_.find(key); it != visited_.end()) {
        sub = it->second;
      } else if (visited_.size() >= static_cast<std::size_t>(bounds_.max_states)) {
        report_.bounds_hit = true;
        sub = std::nullopt;
      } else {
        // References into the map survive rehashing; iterators do not.
        Count& slot = visited_.emplace(std::move(key), Count{0}).first->second;
        sub = visit(out.state, depth + 1);
        slot = sub;
      }
      path_.pop_back();
      sum = add(sum, sub);
    }
    return sum;
  }

  const System& sys_;
  Bounds bounds_;
  const ExploreOptions& options_;
  ExplorationReport report_;
  std::unordered_map<std::string, Count> visited_;
  std::map<ViolationClass, Violation> found_;
  std::set<std::pair<ViolationClass, std::uint64_t>> occurrences_;
  Trace path_;
};

bool matches(const ViolationClass& cls, ViolationKind kind,
             const std::optional<std::string>& name) {
  return cls.kind == kind && (!name || cls.name == *name);
}

}  // namespace

std::set<ViolationClass> ExplorationReport::classes() const {
  std::set<ViolationClass> out;
  for (const auto& v : violations) out.insert(v.cls);
  return out;
}

const Violation* ExplorationReport::find(const ViolationClass& cls) const {
  for (const auto& v : violations) {
    if (v.cls == cls) return &v;
  }
  return nullptr;
}

ExplorationReport explore(const System& system, const Bounds& bounds,
                          const ExploreOptions& options) {
  return Dfs(system, bounds, options).run();
}

ExplorationReport explore(const System& system) {
  return explore(system, system.bounds());
}

std::optional<Violation> find_shortest(const System& system,
                                       ViolationKind kind,
                                       const Bounds& bounds,
                                       const std::optional<std::string>& name) {
  struct Node {
    int parent;
    Choice via;
    int depth;
  };
  std::vector<Node> nodes;
  auto trace_to = [&](int n) {
    Trace t;
    for (; n > 0; n = nodes[static_cast<std::size_t>(n)].parent) {
      t.push_back(nodes[static_cast<std::size_t>(n)].via);
    }
    return Trace(t.rbegin(), t.rend());
  };
  auto hit = [&](const std::vector<ViolationClass>& list)
      -> const ViolationClass* {
    for (const auto& v : list) {
      if (matches(v, kind, name)) return &v;
    }
    return nullptr;
  };

  GlobalState init = system.initial_state();
  if (const auto v = state_violations(system, init); hit(v)) {
    return Violation{*hit(v), {}, init.hash(), 1};
  }
  std::unordered_set<std::string> visited{init.encode()};
  std::deque<std::pair<GlobalState, int>> queue;
  nodes.push_back({-1, {}, 0});
  queue.emplace_back(std::move(init), 0);

  while (!queue.empty()) {
    auto [s, n] = std::move(queue.front());
    queue.pop_front();
    const int depth = nodes[static_cast<std::size_t>(n)].depth;
    if (depth >= bounds.max_depth) continue;
    for (const Choice& c : enabled_actions(system, s)) {
      StepOutcome out = advance_unchecked(system, s, c);
      if (const ViolationClass* v = hit(out.hits)) {
        Trace t = trace_to(n);
        t.push_back(c);
        return Violation{*v, std::move(t), out.state.hash(), 1};
      }
      std::string key = out.state.encode();
      if (visited.count(key) != 0 ||
          visited.size() >= static_cast<std::size_t>(bounds.max_states)) {
        continue;
      }
      visited.insert(std::move(key));
      nodes.push_back({n, c, depth + 1});
      const int m = static_cast<int>(nodes.size()) - 1;
      if (const auto sv = state_violations(system, out.state); hit(sv)) {
        return Violation{*hit(sv), trace_to(m), out.state.hash(), 1};
      }
      queue.emplace_back(std::move(out.state), m);
    }
  }
  return std::nullopt;
}

RandomWalkSummary random_walk(const System& system, std::uint64_t runs,
                              std::uint64_t seed, int max_depth) {
  RandomWalkSummary summary;
  std::mt19937_64 rng(seed);
  auto note = [&](const std::vector<ViolationClass>& list, const Trace& t) {
    for (const auto& v : list) {
      if (summary.classes.insert(v).second) summary.witnesses.emplace_back(v, t);
    }
  };
  const GlobalState init = system.initial_state();
  for (std::uint64_t r = 0; r < runs; ++r) {
    GlobalState s = init;
    Trace trace;
    note(state_violations(system, s), trace);
    for (int depth = 0; depth < max_depth; ++depth) {
      const auto enabled = enabled_actions(system, s);
      if (enabled.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, enabled.size() - 1);
      const Choice& c = enabled[pick(rng)];
      StepOutcome out = advance_unchecked(system, s, c);
      trace.push_back(c);
      note(out.hits, trace);
      s = std::move(out.state);
      note(state_violations(system, s), trace);
    }
  }
  summary.runs = runs;
  return summary;
}

}  // namespace commfn
