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

#ifndef BERNSCHED_DP_EXACT_H_
#define BERNSCHED_DP_EXACT_H_

#include <cstddef>

#include "bernsched/instance.h"
#include "bernsched/policy.h"

namespace bernsched {

struct ExactOptions {
  int max_jobs = 12;
  std::size_t max_states = 5'000'000;
};

struct ExactSolution {
  double value = 0.0;
  PolicyTable policy;  // reachable states only
  std::size_t states = 0;
};

// Optimal non-anticipatory policy. The state is the sorted vector of machine
// available times and the per-type count of unstarted jobs; at t* any type
// with jobs left may start its lowest-q job on a machine available at t*.
// Ties go to the lowest type index. Throws SolverCapExceeded beyond the caps.
ExactSolution SolveExact(const Instance& instance,
                         const ExactOptions& options = {});

// Expectimax over machine-indexed loads and explicit job subsets, without
// memoization or any symmetry reduction. Requires N <= 6.
double BruteForceOracle(const Instance& instance);

// Expectimax that may also leave free machines idle until the next
// completion. Requires N <= 4.
double IdlingOracle(const Instance& instance);

}  // namespace bernsched

#endif  // BERNSCHED_DP_EXACT_H_
