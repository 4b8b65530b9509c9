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

#include "bernsched/filling.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bernsched {

FillResult FillSpaces(const Instance& instance, const std::vector<Space>& spaces,
                      const Realization& realization, bool dummy_job) {
  std::map<int, std::vector<int>> by_machine;
  for (int s = 0; s < static_cast<int>(spaces.size()); ++s) {
    const Space& space = spaces[s];
    if (space.type < 0 || space.type >= instance.num_types() ||
        space.machine < 0 || space.machine >= instance.machines) {
      throw std::invalid_argument("space " + std::to_string(s) +
                                  " has a bad type or machine");
    }
    by_machine[space.machine].push_back(s);
  }
  for (auto& [machine, indices] : by_machine) {
    std::sort(indices.begin(), indices.end(), [&](int a, int b) {
      return spaces[a].left < spaces[b].left;
    });
    for (std::size_t i = 1; i < indices.size(); ++i) {
      const Space& previous = spaces[indices[i - 1]];
      if (spaces[indices[i]].left <
          previous.left + instance.size(previous.type)) {
        throw std::invalid_argument("spaces overlap on machine " +
                                    std::to_string(machine));
      }
    }
  }

  std::vector<int> order(spaces.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return spaces[a].left < spaces[b].left;
  });

  FillResult result;
  std::vector<bool> used(spaces.size(), false);
  for (int j = 0; j < instance.num_types(); ++j) {
    std::vector<int> own;
    for (int s : order) {
      if (spaces[s].type == j) own.push_back(s);
    }
    std::size_t current = 0;
    const int jobs = instance.jobs_of(j);
    for (int k = 0; k < jobs; ++k) {
      if (current >= own.size()) {
        throw std::logic_error("type " + std::to_string(j) +
                               " ran out of spaces");
      }
      const Space& space = spaces[own[current]];
      used[own[current]] = true;
      const bool is_long = realization({j, k});
      ScheduledJob entry{{j, k}, space.machine, space.left, space.left,
                         is_long, space.left};
      if (is_long) {
        entry.completion = space.left + instance.size(j);
        entry.released = entry.completion;
        ++current;
      }
      result.entries.push_back(std::move(entry));
    }
    if (dummy_job && !own.empty()) {
      if (current >= own.size()) {
        throw std::logic_error("type " + std::to_string(j) +
                               " has no space left for the dummy job");
      }
      used[own[current]] = true;
      result.dummy.push_back(own[current]);
    }
  }
  for (int s : order) {
    if (!used[s]) result.unused.push_back(s);
  }
  return result;
}

}  // namespace bernsched
