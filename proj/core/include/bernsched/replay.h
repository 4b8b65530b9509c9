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

#ifndef BERNSCHED_REPLAY_H_
#define BERNSCHED_REPLAY_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bernsched/instance.h"
#include "bernsched/policy.h"
#include "bernsched/rational.h"
#include "bernsched/seed_stream.h"

namespace bernsched {

// Outcome of every job: is_long[type][index].
struct Realization {
  std::vector<std::vector<bool>> is_long;

  bool operator()(JobRef job) const { return is_long[job.type][job.index]; }
  double Probability(const Instance& instance) const;

  static Realization AllLong(const Instance& instance);
  static Realization Sample(const Instance& instance, SeedStream& stream);
};

struct ScheduledJob {
  JobRef job;
  int machine = 0;
  Rational start;
  Rational completion;
  bool is_long = false;
  // Time the machine was declared available again after this job.
  Rational released;
};

// Entries in the order the jobs were started.
struct Schedule {
  std::vector<ScheduledJob> entries;

  Rational TotalCost() const;
};

// Runs `policy` against one realization. Throws std::logic_error if the
// policy starts an unavailable job, releases a machine before the job
// completes, or stalls; lookup failures of tables propagate.
Schedule Replay(const Policy& policy, const Instance& instance,
                const Realization& realization);

// Feasibility: every job exactly once, C = S + X, disjoint busy intervals
// per machine. Returns the first violation.
std::optional<std::string> CheckFeasible(const Schedule& schedule,
                                         const Instance& instance,
                                         const Realization& realization);

// Calls `visit` for every realization of the jobs with 0 < q < 1 (jobs with
// q = 1 are always long) together with its probability. Throws
// std::invalid_argument if more than `max_random` jobs are random.
void ForEachRealization(
    const Instance& instance, int max_random,
    const std::function<void(const Realization&, double)>& visit);

// Exact expectation by enumerating realizations.
double ExpectedCostExact(const Policy& policy, const Instance& instance,
                         int max_random = 20);

struct MonteCarloResult {
  double mean = 0.0;
  double stderr_mean = 0.0;
  int trials = 0;
};

// Trial i samples from SeedStream(seed, i). Trials run on `threads` workers
// (0 picks the hardware concurrency); the fold is sequential, so the result
// does not depend on the thread count.
MonteCarloResult ExpectedCostMonteCarlo(const Policy& policy,
                                        const Instance& instance, int trials,
                                        std::uint64_t seed, int threads = 0);

}  // namespace bernsched

#endif  // BERNSCHED_REPLAY_H_
