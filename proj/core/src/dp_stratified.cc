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

#include "bernsched/dp_stratified.h"

#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <vector>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace bernsched {

namespace {

Rational ReleaseAfterLong(const Rational& completion, int group,
                          const TimeGrid& grid) {
  const Rational& threshold = grid.p_circ()[group];
  return grid.Successor(group, completion < threshold ? threshold : completion);
}

}  // namespace

LoadProfile UpdateProfileLong(const LoadProfile& profile, int type,
                              const Instance& instance, const TimeGrid& grid) {
  return profile.WithEarliestReplaced(ReleaseAfterLong(
      profile.earliest() + instance.size(type), grid.group_of(type), grid));
}

namespace {

Rational IdleTarget(const LoadProfile& profile, const Leftover& leftover,
                    const TimeGrid& grid) {
  int smallest = -1;
  for (int j = 0; j < static_cast<int>(leftover.size()); ++j) {
    if (leftover[j] > 0) smallest = j;
  }
  if (smallest < 0) throw std::logic_error("idle advance with no jobs left");
  const int group = grid.group_of(smallest);
  const Rational& now = profile.earliest();
  Rational target = grid.Successor(group, now);
  if (target == now) target = grid.NextMember(group, now);
  return target;
}

}  // namespace

LoadProfile UpdateProfileIdle(const LoadProfile& profile,
                              const Leftover& leftover, const TimeGrid& grid) {
  const Rational target = IdleTarget(profile, leftover, grid);
  if (!(target > profile.earliest())) {
    throw std::logic_error("idle advance does not move past t*");
  }
  return profile.RaisedTo(target);
}

namespace {

bool Improves(double value, double best) {
  return value < best - 1e-9 * std::max(1.0, std::abs(best));
}

class StratifiedSolver {
 public:
  StratifiedSolver(const Instance& instance, const TimeGrid& grid,
                   const StratifiedOptions& options)
      : instance_(instance), grid_(grid), options_(options) {}

  double Cost(const State& state, int idle_chain) {
    if (IsEmpty(state.leftover)) return 0.0;
    if (auto it = memo_.find(state); it != memo_.end()) {
      return it->second.value;
    }
    const Rational& now = state.profile.earliest();
    const double t = now.ToDouble();
    Entry best{std::numeric_limits<double>::infinity(),
               Decision::Advance(Rational(0))};
    bool any = false;
    for (int j : grid_.AllowedTypes(now)) {
      if (state.leftover[j] == 0) continue;
      const double q =
          instance_.probability({j, instance_.jobs_of(j) - state.leftover[j]});
      const Rational release = ReleaseAfterLong(now + instance_.size(j),
                                                grid_.group_of(j), grid_);
      const LoadProfile after_long = state.profile.WithEarliestReplaced(release);
      Leftover rest = state.leftover;
      --rest[j];
      double value = q * (Cost({after_long, rest}, 0) + t +
                          instance_.size(j).ToDouble());
      if (q < 1.0) value += (1.0 - q) * (Cost({state.profile, rest}, 0) + t);
      if (!any || Improves(value, best.value)) {
        best = {value, Decision::Start(j, release)};
        any = true;
      }
    }
    if (!any) {
      if (idle_chain >= options_.max_idle_chain) {
        throw std::logic_error("stratified solver: " +
                               std::to_string(idle_chain) +
                               " consecutive idle advances at state " +
                               FormatState(state));
      }
      const LoadProfile advanced =
          UpdateProfileIdle(state.profile, state.leftover, grid_);
      best = {Cost({advanced, state.leftover}, idle_chain + 1),
              Decision::Advance(advanced.earliest())};
    }
    if (memo_.size() >= options_.max_states) {
      throw SolverCapExceeded(
          "stratified solver exceeded " + std::to_string(options_.max_states) +
              " states",
          memo_.size());
    }
    memo_.emplace(state, best);
    return best.value;
  }

  const Decision& DecisionAt(const State& state) const {
    return memo_.at(state).decision;
  }

  StratifiedDiagnostics Diagnostics() const {
    std::map<Rational, std::set<std::vector<Rational>>> profiles;
    for (const auto& [state, entry] : memo_) {
      profiles[state.profile.earliest()].insert(state.profile.loads());
    }
    StratifiedDiagnostics diagnostics;
    diagnostics.states = memo_.size();
    diagnostics.relevant_time_points = profiles.size();
    for (const auto& [time, distinct] : profiles) {
      diagnostics.max_profiles_per_timepoint =
          std::max(diagnostics.max_profiles_per_timepoint, distinct.size());
    }
    return diagnostics;
  }

 private:
  struct Entry {
    double value;
    Decision decision;
  };

  const Instance& instance_;
  const TimeGrid& grid_;
  const StratifiedOptions& options_;
  std::unordered_map<State, Entry, StateHash> memo_;
};

}  // namespace

StratifiedSolution SolveStratified(const Instance& instance,
                                   const TimeGrid& grid,
                                   const StratifiedOptions& options) {
  RequireCanonical(instance);
  StratifiedSolver solver(instance, grid, options);
  const State root{LoadProfile(instance.machines), instance.counts()};
  StratifiedSolution solution;
  solution.value = solver.Cost(root, 0);
  solution.diagnostics = solver.Diagnostics();
  solution.policy = ExtractReachable(
      instance, root, "stratified",
      [&solver](const State& state) { return solver.DecisionAt(state); });
  return solution;
}

double TimePointCeiling(const Instance& instance) {
  const double n = instance.num_types();
  const double e = static_cast<double>(instance.inverse_epsilon);
  return std::pow(static_cast<double>(instance.num_jobs()), n) *
         std::pow(e, 2.0 * n);
}

double ProfileCeiling(const Instance& instance, const GroupStructure& groups) {
  const double e = static_cast<double>(instance.inverse_epsilon);
  double ceiling = 1.0;
  for (const auto& members : groups.members) {
    const double points = std::pow(e, 2.0 * members.size());
    for (int i = 1; i <= instance.machines; ++i) {
      ceiling *= (points + i) / i;
    }
  }
  return ceiling;
}

std::optional<std::string> CheckStratified(const Schedule& schedule,
                                           const Instance& instance,
                                           const TimeGrid& grid) {
  std::vector<Rational> earliest_next(instance.machines, Rational(0));
  std::vector<int> next_index(instance.num_types(), 0);
  for (const ScheduledJob& entry : schedule.entries) {
    const int j = entry.job.type;
    const int group = grid.group_of(j);
    std::ostringstream name;
    name << "job (" << j << "," << entry.job.index << ") at " << entry.start;
    if (!grid.Contains(group, entry.start)) {
      return name.str() + " starts outside its allowed time set";
    }
    if (entry.start < earliest_next[entry.machine]) {
      return name.str() + " starts inside a mandated idle window";
    }
    if (entry.job.index != next_index[j]) {
      return name.str() + " breaks the within-type probability order";
    }
    ++next_index[j];
    if (entry.is_long) {
      earliest_next[entry.machine] =
          ReleaseAfterLong(entry.completion, group, grid);
    }
  }
  return std::nullopt;
}

}  // namespace bernsched
