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

#include "bernsched/instance.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace bernsched {

int Instance::num_jobs() const {
  int total = 0;
  for (const JobType& type : types) {
    total += static_cast<int>(type.probabilities.size());
  }
  return total;
}

std::vector<int> Instance::counts() const {
  std::vector<int> result;
  result.reserve(types.size());
  for (const JobType& type : types) {
    result.push_back(static_cast<int>(type.probabilities.size()));
  }
  return result;
}

std::vector<JobRef> Instance::jobs() const {
  std::vector<JobRef> result;
  for (int j = 0; j < num_types(); ++j) {
    for (int k = 0; k < jobs_of(j); ++k) result.push_back({j, k});
  }
  return result;
}

Instance Canonicalize(Instance raw) {
  if (raw.machines < 1) {
    throw std::invalid_argument("instance: need at least one machine");
  }
  if (raw.inverse_epsilon < 2) {
    throw std::invalid_argument("instance: epsilon must be 1/E with E >= 2");
  }
  std::map<Rational, std::vector<double>, std::greater<>> by_size;
  for (JobType& type : raw.types) {
    if (type.size.IsZero()) {
      throw std::invalid_argument("instance: job sizes must be positive");
    }
    for (double q : type.probabilities) {
      if (!(q > 0.0 && q <= 1.0)) {
        throw std::invalid_argument("instance: probability " +
                                    std::to_string(q) +
                                    " is outside (0, 1]");
      }
    }
    if (type.probabilities.empty()) continue;
    auto& bucket = by_size[type.size];
    bucket.insert(bucket.end(), type.probabilities.begin(),
                  type.probabilities.end());
  }
  Instance result;
  result.machines = raw.machines;
  result.inverse_epsilon = raw.inverse_epsilon;
  for (auto& [size, probabilities] : by_size) {
    std::sort(probabilities.begin(), probabilities.end());
    result.types.push_back({size, std::move(probabilities)});
  }
  if (result.num_jobs() == 0) {
    throw std::invalid_argument("instance: no jobs");
  }
  return result;
}

void RequireCanonical(const Instance& instance) {
  if (instance.machines < 1 || instance.inverse_epsilon < 2) {
    throw std::invalid_argument("instance: bad machines or epsilon");
  }
  for (int j = 0; j < instance.num_types(); ++j) {
    const JobType& type = instance.types[j];
    if (type.size.IsZero() || type.probabilities.empty()) {
      throw std::invalid_argument("instance: empty type or zero size");
    }
    if (j > 0 && !(type.size < instance.types[j - 1].size)) {
      throw std::invalid_argument("instance: sizes not strictly decreasing");
    }
    if (!std::is_sorted(type.probabilities.begin(),
                        type.probabilities.end())) {
      throw std::invalid_argument("instance: probabilities not sorted");
    }
    for (double q : type.probabilities) {
      if (!(q > 0.0 && q <= 1.0)) {
        throw std::invalid_argument("instance: probability outside (0, 1]");
      }
    }
  }
}

Instance ScaleSizes(const Instance& instance, const Rational& factor) {
  if (factor.IsZero()) throw std::invalid_argument("scale factor is zero");
  Instance result = instance;
  for (JobType& type : result.types) type.size *= factor;
  return result;
}

int GroupStructure::z() const {
  std::size_t widest = 0;
  for (const auto& group : members) widest = std::max(widest, group.size());
  return static_cast<int>(widest);
}

GroupStructure BuildGroups(const Instance& instance) {
  GroupStructure groups;
  const Rational eps = instance.epsilon();
  const Rational eps_sq = eps * eps;
  for (int j = 0; j < instance.num_types(); ++j) {
    bool joins = j > 0 && instance.size(j) > eps_sq * instance.size(j - 1);
    if (!joins) {
      groups.members.emplace_back();
      groups.largest.push_back(instance.size(j));
      groups.representative.push_back(instance.size(j));
    }
    groups.members.back().push_back(j);
    groups.representative.back() = instance.size(j);
    groups.group_of.push_back(groups.gamma() - 1);
  }
  return groups;
}

namespace {

int FindType(const Instance& instance, const Rational& size) {
  for (int j = 0; j < instance.num_types(); ++j) {
    if (instance.size(j) == size) return j;
  }
  throw std::logic_error("rounding: lost a rounded size");
}

}  // namespace

DivisibilityRounding RoundForDivisibility(const Instance& instance,
                                          const GroupStructure& groups) {
  const int gamma = groups.gamma();
  const Rational eps = instance.epsilon();
  std::vector<Rational> rep(groups.representative);
  for (int h = gamma - 2; h >= 0; --h) {
    rep[h] = CeilToMultipleOf(rep[h], rep[h + 1]);
  }

  Instance raw = instance;
  std::vector<Rational> rounded_size(instance.num_types());
  for (int h = 0; h < gamma; ++h) {
    const Rational grid = eps * rep[h];
    for (int j : groups.members[h]) {
      rounded_size[j] = instance.size(j) == groups.representative[h]
                            ? rep[h]
                            : CeilToMultipleOf(instance.size(j), grid);
      raw.types[j].size = rounded_size[j];
    }
  }

  DivisibilityRounding result;
  result.instance = Canonicalize(std::move(raw));
  result.groups = BuildGroups(result.instance);
  for (int j = 0; j < instance.num_types(); ++j) {
    result.type_map.push_back(FindType(result.instance, rounded_size[j]));
    for (int i = 0; i < j; ++i) {
      if (result.type_map[i] == result.type_map[j]) {
        result.merges.push_back({i, j});
        break;
      }
    }
  }
  for (int a = 0; a < instance.num_types(); ++a) {
    for (int b = a + 1; b < instance.num_types(); ++b) {
      bool before = groups.group_of[a] == groups.group_of[b];
      bool after = result.groups.group_of[result.type_map[a]] ==
                   result.groups.group_of[result.type_map[b]];
      if (before != after) {
        throw std::logic_error(
            "divisibility rounding changed the size-group partition");
      }
    }
  }
  return result;
}

PowerRounding RoundToPowersOfC(const Instance& instance, std::int64_t c) {
  if (c < 2) throw std::invalid_argument("power rounding needs c >= 2");
  const Rational base(c);
  const Rational& smallest = instance.types.back().size;
  PowerRounding result;
  result.prescale = smallest < base ? base / smallest : Rational(1);

  Instance raw = instance;
  std::vector<Rational> rounded_size;
  for (JobType& type : raw.types) {
    const Rational scaled = type.size * result.prescale;
    Rational power = base;
    while (power < scaled) power *= base;
    type.size = power;
    rounded_size.push_back(power);
  }
  result.instance = Canonicalize(std::move(raw));
  for (int j = 0; j < result.instance.num_types(); ++j) {
    Rational power = base;
    int exponent = 1;
    while (power < result.instance.size(j)) {
      power *= base;
      ++exponent;
    }
    result.exponents.push_back(exponent);
  }
  for (const Rational& size : rounded_size) {
    result.type_map.push_back(FindType(result.instance, size));
  }
  return result;
}

SizeClasses PartitionBySize(const Instance& instance, const Rational& scale) {
  if (scale.IsZero()) throw std::invalid_argument("partition: zero scale");
  const BigInt n = instance.num_jobs();
  const Rational small_limit(BigInt(1), n * n);
  const Rational large_limit(boost::multiprecision::pow(n, 8), BigInt(1));
  SizeClasses classes;
  for (int j = 0; j < instance.num_types(); ++j) {
    const Rational normalized = instance.size(j) / scale;
    auto& bucket = normalized < small_limit    ? classes.small
                   : normalized >= large_limit ? classes.large
                                               : classes.medium;
    for (int k = 0; k < instance.jobs_of(j); ++k) bucket.push_back({j, k});
  }
  return classes;
}

InstanceStats ComputeStats(const Instance& instance) {
  InstanceStats stats;
  for (const JobType& type : instance.types) {
    for (double q : type.probabilities) {
      stats.delta = std::max(stats.delta, (1.0 - q) / q);
    }
  }
  return stats;
}

}  // namespace bernsched
