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

#include "bernsched/baselines.h"

#include <algorithm>
#include <stdexcept>

namespace bernsched {
namespace {

class ListRun : public PolicyRun {
 public:
  ListRun(const Instance* instance, const std::vector<JobRef>* order)
      : instance_(instance), order_(order) {}

  Decision Decide(const ReplayView& view) override {
    if (next_ >= order_->size()) {
      throw std::logic_error("list policy ran out of jobs");
    }
    const JobRef job = (*order_)[next_++];
    return Decision::Start(job.type, view.now + instance_->size(job.type),
                           job.index);
  }

 private:
  const Instance* instance_;
  const std::vector<JobRef>* order_;
  std::size_t next_ = 0;
};

class FixedRun : public PolicyRun {
 public:
  FixedRun(const Instance* instance,
           const std::vector<std::vector<JobRef>>* queues)
      : instance_(instance), queues_(queues), next_(queues->size(), 0) {}

  Decision Decide(const ReplayView& view) override {
    const auto& queue = (*queues_)[view.machine];
    std::size_t& next = next_[view.machine];
    if (next >= queue.size()) return Decision::Retire();
    const JobRef job = queue[next++];
    return Decision::Start(job.type, view.now + instance_->size(job.type),
                           job.index);
  }

 private:
  const Instance* instance_;
  const std::vector<std::vector<JobRef>>* queues_;
  std::vector<std::size_t> next_;
};

}  // namespace

ListPolicy::ListPolicy(const Instance& instance, std::vector<JobRef> order,
                       std::string name)
    : instance_(&instance), order_(std::move(order)), name_(std::move(name)) {
  std::vector<JobRef> sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != instance.jobs()) {
    throw std::invalid_argument("list policy must list every job once");
  }
}

std::unique_ptr<PolicyRun> ListPolicy::NewRun() const {
  return std::make_unique<ListRun>(instance_, &order_);
}

std::vector<JobRef> SeptOrder(const Instance& instance) {
  std::vector<JobRef> order = instance.jobs();
  std::vector<Rational> expected;
  for (const JobRef& job : order) {
    expected.push_back(Rational::FromDouble(instance.probability(job)) *
                       instance.size(job.type));
  }
  std::vector<std::size_t> position(order.size());
  for (std::size_t i = 0; i < position.size(); ++i) position[i] = i;
  // jobs() is type-major with q ascending, so a stable sort breaks ties by
  // type and then by q.
  std::stable_sort(position.begin(), position.end(),
                   [&](std::size_t a, std::size_t b) {
                     return expected[a] < expected[b];
                   });
  std::vector<JobRef> result;
  for (std::size_t i : position) result.push_back(order[i]);
  return result;
}

std::unique_ptr<ListPolicy> MakeSeptPolicy(const Instance& instance) {
  return std::make_unique<ListPolicy>(instance, SeptOrder(instance), "sept");
}

FixedAssignmentPolicy::FixedAssignmentPolicy(const Instance& instance)
    : instance_(&instance), queues_(instance.machines) {
  const std::vector<JobRef> order = SeptOrder(instance);
  for (std::size_t i = 0; i < order.size(); ++i) {
    queues_[i % queues_.size()].push_back(order[i]);
  }
}

std::unique_ptr<PolicyRun> FixedAssignmentPolicy::NewRun() const {
  return std::make_unique<FixedRun>(instance_, &queues_);
}

}  // namespace bernsched
