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

#include "bernsched/policy.h"

#include <deque>
#include <stdexcept>

namespace bernsched {

State ReplayView::Key() const {
  return {LoadProfile(*available), *leftover};
}

const Decision& PolicyTable::Lookup(const State& state) const {
  auto it = decisions_.find(state);
  if (it == decisions_.end()) {
    throw std::out_of_range("policy table has no decision for state " +
                            FormatState(state));
  }
  return it->second;
}

namespace {

class TableRun : public PolicyRun {
 public:
  explicit TableRun(const PolicyTable* table) : table_(table) {}
  Decision Decide(const ReplayView& view) override {
    return table_->Lookup(view.Key());
  }

 private:
  const PolicyTable* table_;
};

}  // namespace

std::unique_ptr<PolicyRun> PolicyTable::NewRun() const {
  return std::make_unique<TableRun>(this);
}

std::vector<State> Successors(const Instance& instance, const State& state,
                              const Decision& decision) {
  std::vector<State> next;
  switch (decision.kind) {
    case DecisionKind::kAdvance:
      if (!(decision.time > state.profile.earliest())) {
        throw std::logic_error("advance does not move past t* in state " +
                               FormatState(state));
      }
      next.push_back({state.profile.RaisedTo(decision.time), state.leftover});
      break;
    case DecisionKind::kStart: {
      const int j = decision.type;
      if (j < 0 || j >= instance.num_types() || state.leftover[j] == 0) {
        throw std::logic_error("start of an exhausted type in state " +
                               FormatState(state));
      }
      Leftover rest = state.leftover;
      --rest[j];
      const int index = instance.jobs_of(j) - state.leftover[j];
      next.push_back({state.profile.WithEarliestReplaced(decision.time), rest});
      if (instance.probability({j, index}) < 1.0) {
        next.push_back({state.profile, std::move(rest)});
      }
      break;
    }
    case DecisionKind::kRetire:
      throw std::logic_error("tables cannot retire machines");
  }
  return next;
}

PolicyTable ExtractReachable(
    const Instance& instance, const State& root, std::string kind,
    const std::function<Decision(const State&)>& decide) {
  PolicyTable::Map decisions;
  std::deque<State> frontier;
  if (!IsEmpty(root.leftover)) frontier.push_back(root);
  while (!frontier.empty()) {
    State state = std::move(frontier.front());
    frontier.pop_front();
    if (decisions.count(state)) continue;
    Decision decision = decide(state);
    for (State& next : Successors(instance, state, decision)) {
      if (!IsEmpty(next.leftover) && !decisions.count(next)) {
        frontier.push_back(std::move(next));
      }
    }
    decisions.emplace(std::move(state), std::move(decision));
  }
  return PolicyTable(std::move(kind), root.profile.machines(),
                     std::move(decisions));
}

}  // namespace bernsched
