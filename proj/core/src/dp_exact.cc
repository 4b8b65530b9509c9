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

#include "bernsched/dp_exact.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace bernsched {
namespace {

bool Improves(double value, double best) {
  return value < best - 1e-9 * std::max(1.0, std::abs(best));
}

class ExactSolver {
 public:
  ExactSolver(const Instance& instance, const ExactOptions& options)
      : instance_(instance), options_(options) {}

  double Cost(const State& state) {
    if (IsEmpty(state.leftover)) return 0.0;
    if (auto it = memo_.find(state); it != memo_.end()) {
      return it->second.value;
    }
    const Rational& now = state.profile.earliest();
    const double t = now.ToDouble();
    Entry best{std::numeric_limits<double>::infinity(), -1};
    for (int j = 0; j < instance_.num_types(); ++j) {
      if (state.leftover[j] == 0) continue;
      const double q =
          instance_.probability({j, instance_.jobs_of(j) - state.leftover[j]});
      State rest{state.profile, state.leftover};
      --rest.leftover[j];
      State long_state{
          state.profile.WithEarliestReplaced(now + instance_.size(j)),
          rest.leftover};
      double value =
          q * (Cost(long_state) + t + instance_.size(j).ToDouble());
      if (q < 1.0) value += (1.0 - q) * (Cost(rest) + t);
      if (best.type < 0 || Improves(value, best.value)) best = {value, j};
    }
    if (memo_.size() >= options_.max_states) {
      throw SolverCapExceeded(
          "exact solver exceeded " + std::to_string(options_.max_states) +
              " states",
          memo_.size());
    }
    memo_.emplace(state, best);
    return best.value;
  }

  Decision DecisionAt(const State& state) const {
    const int j = memo_.at(state).type;
    return Decision::Start(j, state.profile.earliest() + instance_.size(j));
  }

  std::size_t states() const { return memo_.size(); }

 private:
  struct Entry {
    double value;
    int type;
  };

  const Instance& instance_;
  const ExactOptions& options_;
  std::unordered_map<State, Entry, StateHash> memo_;
};

}  // namespace

ExactSolution SolveExact(const Instance& instance,
                         const ExactOptions& options) {
  RequireCanonical(instance);
  if (instance.num_jobs() > options.max_jobs) {
    throw SolverCapExceeded("exact solver: " +
                                std::to_string(instance.num_jobs()) +
                                " jobs exceed the cap of " +
                                std::to_string(options.max_jobs),
                            0);
  }
  ExactSolver solver(instance, options);
  const State root{LoadProfile(instance.machines), instance.counts()};
  ExactSolution solution;
  solution.value = solver.Cost(root);
  solution.states = solver.states();
  solution.policy = ExtractReachable(
      instance, root, "exact",
      [&solver](const State& state) { return solver.DecisionAt(state); });
  return solution;
}

namespace {

struct FlatJob {
  Rational size;
  double q;
};

std::vector<FlatJob> Flatten(const Instance& instance) {
  std::vector<FlatJob> jobs;
  for (const JobRef& job : instance.jobs()) {
    jobs.push_back({instance.size(job.type), instance.probability(job)});
  }
  return jobs;
}

double BruteForce(const std::vector<FlatJob>& jobs,
                  std::vector<Rational>& loads, unsigned remaining) {
  if (remaining == 0) return 0.0;
  std::size_t machine = 0;
  for (std::size_t i = 1; i < loads.size(); ++i) {
    if (loads[i] < loads[machine]) machine = i;
  }
  const Rational start = loads[machine];
  const double t = start.ToDouble();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    if (!(remaining & (1u << k))) continue;
    const unsigned rest = remaining & ~(1u << k);
    loads[machine] = start + jobs[k].size;
    double value = jobs[k].q *
                   (BruteForce(jobs, loads, rest) + t + jobs[k].size.ToDouble());
    loads[machine] = start;
    if (jobs[k].q < 1.0) {
      value += (1.0 - jobs[k].q) * (BruteForce(jobs, loads, rest) + t);
    }
    best = std::min(best, value);
  }
  return best;
}

double WithIdling(const std::vector<FlatJob>& jobs, const Rational& now,
                  std::vector<Rational>& busy, unsigned remaining) {
  if (remaining == 0) return 0.0;
  const double t = now.ToDouble();
  double best = std::numeric_limits<double>::infinity();
  const Rational* next_epoch = nullptr;
  for (const Rational& until : busy) {
    if (until > now && (!next_epoch || until < *next_epoch)) {
      next_epoch = &until;
    }
  }
  for (std::size_t machine = 0; machine < busy.size(); ++machine) {
    if (busy[machine] > now) continue;
    const Rational previous = busy[machine];
    for (std::size_t k = 0; k < jobs.size(); ++k) {
      if (!(remaining & (1u << k))) continue;
      const unsigned rest = remaining & ~(1u << k);
      busy[machine] = now + jobs[k].size;
      double value = jobs[k].q * (WithIdling(jobs, now, busy, rest) + t +
                                  jobs[k].size.ToDouble());
      busy[machine] = now;
      if (jobs[k].q < 1.0) {
        value += (1.0 - jobs[k].q) * (WithIdling(jobs, now, busy, rest) + t);
      }
      busy[machine] = previous;
      best = std::min(best, value);
    }
  }
  if (next_epoch) {
    const Rational later = *next_epoch;
    best = std::min(best, WithIdling(jobs, later, busy, remaining));
  }
  return best;
}

}  // namespace

double BruteForceOracle(const Instance& instance) {
  if (instance.num_jobs() > 6) {
    throw std::invalid_argument("brute force oracle needs N <= 6");
  }
  const std::vector<FlatJob> jobs = Flatten(instance);
  std::vector<Rational> loads(instance.machines, Rational(0));
  return BruteForce(jobs, loads, (1u << jobs.size()) - 1);
}

double IdlingOracle(const Instance& instance) {
  if (instance.num_jobs() > 4) {
    throw std::invalid_argument("idling oracle needs N <= 4");
  }
  const std::vector<FlatJob> jobs = Flatten(instance);
  std::vector<Rational> busy(instance.machines, Rational(0));
  return WithIdling(jobs, Rational(0), busy, (1u << jobs.size()) - 1);
}

}  // namespace bernsched
