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

#ifndef BERNSCHED_TESTS_SUPPORT_ORACLES_H_
#define BERNSCHED_TESTS_SUPPORT_ORACLES_H_

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "bernsched/instance.h"
#include "bernsched/rational.h"

namespace bernsched::testing {

// Allowed start times enumerated literally from the set definitions, with
// 1-based groups internally and every member below `limit` materialized.
class GridOracle {
 public:
  GridOracle(const Instance& rounded, const Rational& limit);

  int gamma() const { return static_cast<int>(members_.size()); }
  const Rational& limit() const { return limit_; }
  // 0-based group index, as in the library.
  const std::set<Rational>& members(int group) const {
    return members_[group];
  }
  const std::vector<Rational>& p_star() const { return p_star_; }
  const std::vector<Rational>& p_circ() const { return p_circ_; }
  const std::vector<Rational>& endpoints() const { return endpoints_; }

  bool Contains(int group, const Rational& t) const;
  // Smallest member >= t, if one lies below the limit.
  std::optional<Rational> Successor(int group, const Rational& t) const;
  // Smallest member > t, if one lies below the limit.
  std::optional<Rational> After(int group, const Rational& t) const;

 private:
  Rational limit_;
  std::vector<Rational> p_star_;  // 0-based
  std::vector<Rational> p_circ_;
  std::vector<Rational> endpoints_;  // unstretched, below limit
  std::vector<std::set<Rational>> members_;
};

// Every instance whose jobs are a multiset of (size, q) pairs with at most
// `max_jobs` elements, on each machine count in `machines`.
std::vector<Instance> EnumerateInstances(const std::vector<std::int64_t>& sizes,
                                         const std::vector<double>& qs,
                                         int max_jobs,
                                         const std::vector<int>& machines,
                                         std::int64_t inverse_epsilon = 13);

// Optimal total completion time of deterministic jobs on identical machines:
// with sizes sorted descending, the k-th one (1-based) is counted ceil(k/m)
// times.
double SptValue(std::vector<Rational> sizes, int machines);

// Random instance with sizes from `sizes`, 1..max_jobs jobs and 1..max_m
// machines, probabilities k/20.
Instance RandomSmallInstance(std::uint64_t seed, std::uint64_t index,
                             const std::vector<std::int64_t>& sizes,
                             int max_jobs, int max_machines);

}  // namespace bernsched::testing

#endif  // BERNSCHED_TESTS_SUPPORT_ORACLES_H_
