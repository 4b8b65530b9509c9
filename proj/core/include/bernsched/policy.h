// Copyright 2026 The bernsched Authors.
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

#ifndef BERNSCHED_POLICY_H_
#define BERNSCHED_POLICY_H_

#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "bernsched/instance.h"
#include "bernsched/rational.h"
#include "bernsched/state.h"

namespace bernsched {

enum class DecisionKind {
  kStart,    // start a job on the decision machine at the current time
  kAdvance,  // raise every machine below `time` to `time`
  kRetire,   // the decision machine takes no further jobs
};

struct Decision {
  DecisionKind kind = DecisionKind::kStart;
  int type = -1;
  int index = -1;  // job within the type; -1 means the lowest-q unstarted one
  // kStart: when the machine becomes available again if the job is long
  // (at least the completion time). kAdvance: the target time.
  Rational time;

  static Decision Start(int type, Rational available_if_long, int index = -1) {
    return {DecisionKind::kStart, type, index, std::move(available_if_long)};
  }
  static Decision Advance(Rational target) {
    return {DecisionKind::kAdvance, -1, -1, std::move(target)};
  }
  static Decision Retire() { return {DecisionKind::kRetire, -1, -1, {}}; }

  friend bool operator==(const Decision&, const Decision&) = default;
};

// What a policy sees at a decision point: only outcomes of started jobs.
struct ReplayView {
  const Instance* instance = nullptr;
  const std::vector<Rational>* available = nullptr;  // per machine
  const std::vector<bool>* retired = nullptr;
  const std::vector<std::vector<bool>>* started = nullptr;
  const Leftover* leftover = nullptr;
  int machine = 0;  // lowest-index active machine at the earliest time
  Rational now;

  // Sorted available times of all machines together with the leftover.
  State Key() const;
};

// One execution of a policy. Runs may keep history between calls.
class PolicyRun {
 public:
  virtual ~PolicyRun() = default;
  virtual Decision Decide(const ReplayView& view) = 0;
  virtual void Observe(JobRef /*job*/, bool /*is_long*/) {}
};

class Policy {
 public:
  virtual ~Policy() = default;
  virtual std::unique_ptr<PolicyRun> NewRun() const = 0;
  virtual std::string name() const = 0;
};

// Decisions keyed by (sorted profile, leftover). Fully determines replay
// without access to the solver or the time grid.
class PolicyTable : public Policy {
 public:
  using Map = std::unordered_map<State, Decision, StateHash>;

  PolicyTable() = default;
  PolicyTable(std::string kind, int machines, Map decisions)
      : kind_(std::move(kind)),
        machines_(machines),
        decisions_(std::move(decisions)) {}

  const std::string& kind() const { return kind_; }
  int machines() const { return machines_; }
  const Map& decisions() const { return decisions_; }
  std::size_t size() const { return decisions_.size(); }

  // Throws std::out_of_range naming the state if it has no decision.
  const Decision& Lookup(const State& state) const;

  std::unique_ptr<PolicyRun> NewRun() const override;
  std::string name() const override { return kind_; }

 private:
  std::string kind_;
  int machines_ = 0;
  Map decisions_;
};

// Follows `decide` from `root` through both outcomes of every start and
// collects the decisions of all reachable states with jobs left.
PolicyTable ExtractReachable(
    const Instance& instance, const State& root, std::string kind,
    const std::function<Decision(const State&)>& decide);

// Successor states of `state` under `decision`: the long branch first, then
// the short branch when the job can be short.
std::vector<State> Successors(const Instance& instance, const State& state,
                              const Decision& decision);

}  // namespace bernsched

#endif  // BERNSCHED_POLICY_H_
