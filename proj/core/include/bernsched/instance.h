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

#ifndef BERNSCHED_INSTANCE_H_
#define BERNSCHED_INSTANCE_H_

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "bernsched/rational.h"

namespace bernsched {

// All jobs of one type share the size parameter; each job has its own
// probability of being long. In a canonical instance the probabilities are
// non-decreasing, so the job at position k is the k-th to be started by any
// policy that respects the within-type order.
struct JobType {
  Rational size;
  std::vector<double> probabilities;
};

// A job is addressed by its type and its position in that type's list.
struct JobRef {
  int type = 0;
  int index = 0;
  friend auto operator<=>(const JobRef&, const JobRef&) = default;
};

// m identical machines, job types and epsilon = 1 / inverse_epsilon.
// Canonical form: sizes strictly decreasing (type 0 is the largest),
// probabilities non-decreasing within a type, no empty types.
struct Instance {
  int machines = 1;
  std::int64_t inverse_epsilon = 13;
  std::vector<JobType> types;

  Rational epsilon() const { return Rational(1, inverse_epsilon); }
  int num_types() const { return static_cast<int>(types.size()); }
  int num_jobs() const;
  int jobs_of(int type) const {
    return static_cast<int>(types[type].probabilities.size());
  }
  const Rational& size(int type) const { return types[type].size; }
  double probability(JobRef job) const {
    return types[job.type].probabilities[job.index];
  }
  std::vector<int> counts() const;
  std::vector<JobRef> jobs() const;  // type-major, index order
};

// Validates a parsed instance and brings it to canonical form: equal sizes
// merge into one type, types sort by size descending, probabilities sort
// ascending. Throws std::invalid_argument on a non-positive size, a
// probability outside (0, 1], machines < 1, inverse_epsilon < 2, or N = 0.
Instance Canonicalize(Instance raw);

// Throws std::invalid_argument unless `instance` is canonical. N = 0 is
// accepted here (solvers handle the empty instance).
void RequireCanonical(const Instance& instance);

// Same instance with every size multiplied by `factor` (> 0).
Instance ScaleSizes(const Instance& instance, const Rational& factor);

// Size groups G_1..G_gamma, stored 0-based: group 0 holds the largest sizes.
// A type joins the current group iff its size is strictly larger than
// eps^2 times the previous type's size.
struct GroupStructure {
  std::vector<std::vector<int>> members;
  std::vector<int> group_of;
  std::vector<Rational> representative;  // smallest size in the group
  std::vector<Rational> largest;         // largest size in the group

  int gamma() const { return static_cast<int>(members.size()); }
  int z() const;
};

GroupStructure BuildGroups(const Instance& instance);

struct TypeMerge {
  int kept = 0;      // original type index that survives
  int absorbed = 0;  // original type index merged into it
};

struct DivisibilityRounding {
  Instance instance;
  GroupStructure groups;
  std::vector<int> type_map;  // original type -> rounded type
  std::vector<TypeMerge> merges;
};

// Rounds representatives bottom-up so that p_{G_h} divides p_{G_{h-1}}, then
// every size in G_h up to a multiple of eps * p_{G_h}. Each size grows by a
// factor of at most (1 + eps). Types that land on the same size merge. Throws
// std::logic_error if the recomputed grouping differs from the input one.
DivisibilityRounding RoundForDivisibility(const Instance& instance,
                                          const GroupStructure& groups);

struct PowerRounding {
  Instance instance;
  Rational prescale;           // uniform factor applied before rounding
  std::vector<int> exponents;  // rounded type j has size c^exponents[j]
  std::vector<int> type_map;   // original type -> rounded type
};

// Scales all sizes so the smallest is at least c, then rounds each up to the
// next power c^k (k >= 1).
PowerRounding RoundToPowersOfC(const Instance& instance, std::int64_t c);

struct SizeClasses {
  std::vector<JobRef> small;   // p / scale <  1 / N^2
  std::vector<JobRef> medium;  // otherwise
  std::vector<JobRef> large;   // p / scale >= N^8
};

SizeClasses PartitionBySize(const Instance& instance, const Rational& scale);

struct InstanceStats {
  // max over jobs of Var[X] / E[X]^2 = (1 - q) / q.
  double delta = 0.0;
};

InstanceStats ComputeStats(const Instance& instance);

}  // namespace bernsched

#endif  // BERNSCHED_INSTANCE_H_
