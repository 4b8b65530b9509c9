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

#ifndef BERNSCHED_QUASIPOLY_H_
#define BERNSCHED_QUASIPOLY_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bernsched/dp_stratified.h"
#include "bernsched/instance.h"
#include "bernsched/policy.h"

namespace bernsched {

struct QuasiPolyOptions {
  std::int64_t c = 169;
  // Normalization for the size classes. Unset: the expected cost of SEPT on
  // the rounded instance (enumerated, or sampled when there are more than
  // `enumeration_limit` random jobs).
  std::optional<Rational> scale;
  int enumeration_limit = 16;
  int proxy_trials = 10000;
  std::uint64_t seed = 0;
  StratifiedOptions inner;
};

struct QuasiPolyPlan {
  PowerRounding rounding;  // the policy runs on rounding.instance
  Rational scale;
  SizeClasses classes;
  // Medium jobs start no earlier than this: scale / N if there are small
  // jobs, otherwise 0.
  Rational medium_start;
  Instance medium;                 // the medium types only
  std::vector<int> medium_types;   // medium type -> rounded type
  std::optional<StratifiedSolution> inner;
};

// Rounds sizes to powers of c, splits jobs into small / medium / large by
// size relative to the scale and solves the stratified program on the
// medium jobs.
QuasiPolyPlan PlanQuasiPoly(const Instance& instance,
                            const QuasiPolyOptions& options = {});

// Large jobs first in index order. If one of them is long, everything else
// follows greedily in index order. Otherwise the small jobs run greedily,
// all machines wait until the medium start time, and the stratified policy
// schedules the medium jobs shifted by that time.
class QuasiPolyPolicy : public Policy {
 public:
  explicit QuasiPolyPolicy(QuasiPolyPlan plan);

  const QuasiPolyPlan& plan() const { return plan_; }
  const Instance& instance() const { return plan_.rounding.instance; }
  std::unique_ptr<PolicyRun> NewRun() const override;
  std::string name() const override { return "quasipoly"; }

 private:
  QuasiPolyPlan plan_;
};

}  // namespace bernsched

#endif  // BERNSCHED_QUASIPOLY_H_
