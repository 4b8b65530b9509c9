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

#ifndef BERNSCHED_FILLING_H_
#define BERNSCHED_FILLING_H_

#include <vector>

#include "bernsched/instance.h"
#include "bernsched/rational.h"
#include "bernsched/replay.h"

namespace bernsched {

// An idle slot [left, left + p_type) reserved on a machine for one job type.
struct Space {
  int machine = 0;
  Rational left;
  int type = 0;
};

struct FillResult {
  std::vector<ScheduledJob> entries;
  // Spaces (indices into the input) that received no job.
  std::vector<int> unused;
  // Spaces occupied by the always-long dummy job, one per type at most.
  std::vector<int> dummy;
};

// Greedy filling of each type's spaces in order of their left endpoints: the
// lowest-q unplaced job of the type starts at the left endpoint of the
// current space; a short job leaves the space open for the next job, a long
// one closes it. With `dummy_job`, every type with spaces additionally gets
// one always-long job after its real jobs. Throws std::invalid_argument on
// overlapping spaces and std::logic_error if a type runs out of spaces.
FillResult FillSpaces(const Instance& instance, const std::vector<Space>& spaces,
                      const Realization& realization, bool dummy_job = false);

}  // namespace bernsched

#endif  // BERNSCHED_FILLING_H_
