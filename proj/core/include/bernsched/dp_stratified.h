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

#ifndef BERNSCHED_DP_STRATIFIED_H_
#define BERNSCHED_DP_STRATIFIED_H_

#include <cstddef>
#include <optional>
#include <string>

#include "bernsched/instance.h"
#include "bernsched/policy.h"
#include "bernsched/replay.h"
#include "bernsched/timegrid.h"

namespace bernsched {

struct StratifiedOptions {
  std::size_t max_states = 2'000'000;
  // Longest run of consecutive idle advances before the solver gives up.
  int max_idle_chain = 64;
};

struct StratifiedDiagnostics {
  std::size_t relevant_time_points = 0;  // distinct t* over all states
  std::size_t max_profiles_per_timepoint = 0;
  std::size_t states = 0;
};

struct StratifiedSolution {
  double value = 0.0;
  PolicyTable policy;  // reachable states only
  StratifiedDiagnostics diagnostics;
};

// m^j: the machine at t* becomes available at the first point of Q_{G(j)}
// at or after max(p°_{G(j)}, t* + p_j).
LoadProfile UpdateProfileLong(const LoadProfile& profile, int type,
                              const Instance& instance, const TimeGrid& grid);

// m^0: with j* the smallest remaining type, every entry below the next
// point t(j*) of Q_{G(j*)} after t* is raised to t(j*). Throws
// std::logic_error if t(j*) does not lie beyond t*.
LoadProfile UpdateProfileIdle(const LoadProfile& profile,
                              const Leftover& leftover, const TimeGrid& grid);

// Optimal stratified policy for `instance`, which must be rounded for
// divisibility and match `grid`. At t* the candidates are the types whose
// group allows t*; if none has jobs left the profile advances by m^0.
StratifiedSolution SolveStratified(const Instance& instance,
                                   const TimeGrid& grid,
                                   const StratifiedOptions& options = {});

// Ceilings for the diagnostics: N^n eps^{-2n} time points, and
// prod_h C(eps^{-2|G_h|} + m, m) profiles per time point (as doubles).
double TimePointCeiling(const Instance& instance);
double ProfileCeiling(const Instance& instance, const GroupStructure& groups);

// Checks a replayed schedule against the stratified rules: every start of a
// type-j job lies in Q_{G(j)}; after a long type-j job completes at C its
// machine starts nothing before the first Q_{G(j)} point at or after
// max(p°_{G(j)}, C); jobs of a type start in q-ascending order. Returns a
// description of the first violation.
std::optional<std::string> CheckStratified(const Schedule& schedule,
                                           const Instance& instance,
                                           const TimeGrid& grid);

}  // namespace bernsched

#endif  // BERNSCHED_DP_STRATIFIED_H_
