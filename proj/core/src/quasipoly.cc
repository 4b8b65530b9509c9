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

#include "bernsched/quasipoly.h"

#include <algorithm>
#include <stdexcept>

#include "bernsched/baselines.h"
#include "bernsched/replay.h"
#include "bernsched/timegrid.h"

namespace bernsched {

QuasiPolyPlan PlanQuasiPoly(const Instance& instance,
                            const QuasiPolyOptions& options) {
  RequireCanonical(instance);
  QuasiPolyPlan plan;
  plan.rounding = RoundToPowersOfC(instance, options.c);
  const Instance& rounded = plan.rounding.instance;

  if (options.scale) {
    plan.scale = *options.scale;
  } else {
    const auto sept = MakeSeptPolicy(rounded);
    int random_jobs = 0;
    for (const JobRef& job : rounded.jobs()) {
      random_jobs += rounded.probability(job) < 1.0;
    }
    const double proxy =
        random_jobs <= options.enumeration_limit
            ? ExpectedCostExact(*sept, rounded, options.enumeration_limit)
            : ExpectedCostMonteCarlo(*sept, rounded, options.proxy_trials,
                                     options.seed)
                  .mean;
    plan.scale = Rational::FromDouble(proxy);
  }
  plan.classes = PartitionBySize(rounded, plan.scale);
  plan.medium_start = plan.classes.small.empty()
                          ? Rational(0)
                          : plan.scale / Rational(rounded.num_jobs());

  plan.medium.machines = rounded.machines;
  plan.medium.inverse_epsilon = rounded.inverse_epsilon;
  for (int j = 0; j < rounded.num_types(); ++j) {
    const bool is_medium = std::any_of(
        plan.classes.medium.begin(), plan.classes.medium.end(),
        [j](const JobRef& job) { return job.type == j; });
    if (!is_medium) continue;
    plan.medium.types.push_back(rounded.types[j]);
    plan.medium_types.push_back(j);
  }
  if (!plan.medium.types.empty()) {
    const GroupStructure groups = BuildGroups(plan.medium);
    const DivisibilityRounding check = RoundForDivisibility(plan.medium, groups);
    if (check.instance.num_types() != plan.medium.num_types()) {
      throw std::logic_error("powers of c are not divisibility-rounded");
    }
    for (int j = 0; j < plan.medium.num_types(); ++j) {
      if (check.instance.size(j) != plan.medium.size(j)) {
        throw std::logic_error("powers of c are not divisibility-rounded");
      }
    }
    const TimeGrid grid(plan.medium, groups);
    plan.inner = SolveStratified(plan.medium, grid, options.inner);
  }
  return plan;
}

namespace {

class QuasiPolyRun : public PolicyRun {
 public:
  explicit QuasiPolyRun(const QuasiPolyPlan* plan) : plan_(plan) {}

  Decision Decide(const ReplayView& view) override {
    const Instance& instance = plan_->rounding.instance;
    while (true) {
      switch (phase_) {
        case Phase::kLarge:
          if (next_large_ < plan_->classes.large.size()) {
            return StartNow(plan_->classes.large[next_large_++], view);
          }
          phase_ = any_long_ ? Phase::kGreedy : Phase::kSmall;
          break;
        case Phase::kGreedy:
          for (const JobRef& job : instance.jobs()) {
            if (!(*view.started)[job.type][job.index]) {
              return StartNow(job, view);
            }
          }
          throw std::logic_error("quasipoly: no job left to start");
        case Phase::kSmall:
          if (next_small_ < plan_->classes.small.size()) {
            return StartNow(plan_->classes.small[next_small_++], view);
          }
          phase_ = Phase::kMedium;
          if (view.now < plan_->medium_start) {
            return Decision::Advance(plan_->medium_start);
          }
          break;
        case Phase::kMedium:
          return MediumDecision(view);
      }
    }
  }

  void Observe(JobRef /*job*/, bool is_long) override {
    if (phase_ == Phase::kLarge && is_long) any_long_ = true;
  }

 private:
  enum class Phase { kLarge, kGreedy, kSmall, kMedium };

  Decision StartNow(const JobRef& job, const ReplayView& view) const {
    return Decision::Start(
        job.type, view.now + plan_->rounding.instance.size(job.type),
        job.index);
  }

  Decision MediumDecision(const ReplayView& view) const {
    const Rational& offset = plan_->medium_start;
    Leftover inner_left;
    for (int rounded_type : plan_->medium_types) {
      inner_left.push_back((*view.leftover)[rounded_type]);
    }
    const State key{LoadProfile(*view.available).Shifted(offset), inner_left};
    const Decision inner = plan_->inner->policy.Lookup(key);
    if (inner.kind == DecisionKind::kAdvance) {
      return Decision::Advance(inner.time + offset);
    }
    return Decision::Start(plan_->medium_types[inner.type],
                           inner.time + offset);
  }

  const QuasiPolyPlan* plan_;
  Phase phase_ = Phase::kLarge;
  std::size_t next_large_ = 0;
  std::size_t next_small_ = 0;
  bool any_long_ = false;
};

}  // namespace

QuasiPolyPolicy::QuasiPolyPolicy(QuasiPolyPlan plan) : plan_(std::move(plan)) {}

std::unique_ptr<PolicyRun> QuasiPolyPolicy::NewRun() const {
  return std::make_unique<QuasiPolyRun>(&plan_);
}

}  // namespace bernsched
