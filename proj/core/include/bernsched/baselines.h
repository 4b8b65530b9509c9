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

#ifndef BERNSCHED_BASELINES_H_
#define BERNSCHED_BASELINES_H_

#include <memory>
#include <string>
#include <vector>

#include "bernsched/instance.h"
#include "bernsched/policy.h"

namespace bernsched {

// Non-idling list scheduling: whenever a machine is free, start the next job
// of `order` on it.
class ListPolicy : public Policy {
 public:
  ListPolicy(const Instance& instance, std::vector<JobRef> order,
             std::string name = "list");

  const std::vector<JobRef>& order() const { return order_; }
  std::unique_ptr<PolicyRun> NewRun() const override;
  std::string name() const override { return name_; }

 private:
  const Instance* instance_;
  std::vector<JobRef> order_;
  std::string name_;
};

// Jobs by ascending expected size q * p, ties by type then q.
std::vector<JobRef> SeptOrder(const Instance& instance);

std::unique_ptr<ListPolicy> MakeSeptPolicy(const Instance& instance);

// Deals the SEPT order round-robin to the machines at time 0; each machine
// runs its own jobs back to back and never takes others.
class FixedAssignmentPolicy : public Policy {
 public:
  explicit FixedAssignmentPolicy(const Instance& instance);

  const std::vector<std::vector<JobRef>>& assignment() const {
    return queues_;
  }
  std::unique_ptr<PolicyRun> NewRun() const override;
  std::string name() const override { return "fixed"; }

 private:
  const Instance* instance_;
  std::vector<std::vector<JobRef>> queues_;
};

}  // namespace bernsched

#endif  // BERNSCHED_BASELINES_H_
