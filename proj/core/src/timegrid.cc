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

#include "bernsched/timegrid.h"

#include <algorithm>
#include <stdexcept>

namespace bernsched {

TimeGrid::TimeGrid(const Instance& instance, const GroupStructure& groups)
    : epsilon_(instance.epsilon()),
      stretch_(Rational(1) + Rational(5) * instance.epsilon()),
      largest_(groups.largest),
      group_of_(groups.group_of) {
  const int gamma = groups.gamma();
  if (gamma == 0) throw std::invalid_argument("time grid: no job types");
  const Rational factor = (Rational(1) + epsilon_) * epsilon_;
  const auto& rep = groups.representative;
  for (int h = 0; h < gamma; ++h) {
    pitch_.push_back(epsilon_ * rep[h]);
    Rational sum;
    for (int k = h; k + 1 < gamma; ++k) {
      std::int64_t below = 3;
      for (int i = k + 1; i < gamma; ++i) {
        below += static_cast<std::int64_t>(groups.members[i].size());
      }
      sum += Rational(below) * rep[k];
    }
    p_star_.push_back(rep[h] + factor * sum);
    p_circ_.push_back(stretch_ * p_star_.back());
  }
  for (int h = 1; h < gamma; ++h) {
    if (!(p_star_[h] < p_star_[h - 1])) {
      throw std::logic_error("time grid: thresholds are not decreasing");
    }
  }

  prefix_.push_back(Rational(0));
  prefix_group_.push_back(-1);
  for (int h = gamma - 1; h >= 1; --h) {
    const Rational& pitch = pitch_[h];
    Rational point = p_star_[h];
    prefix_.push_back(point);
    prefix_group_.push_back(h);
    while (point + pitch + pitch < p_star_[h - 1]) {
      point += pitch;
      prefix_.push_back(point);
      prefix_group_.push_back(h);
    }
    const Rational gap = p_star_[h - 1] - point;
    if (gap > pitch) {
      prefix_.push_back(point + gap / Rational(2));
      prefix_group_.push_back(h);
    }
  }
  prefix_.push_back(p_star_[0]);
  prefix_group_.push_back(0);
  for (const Rational& l : prefix_) stretched_prefix_.push_back(stretch_ * l);
}

Rational TimeGrid::Endpoint(std::int64_t k) const {
  const std::int64_t last = static_cast<std::int64_t>(prefix_.size()) - 1;
  if (k <= last) return prefix_[k];
  return p_star_[0] + Rational(k - last) * pitch_[0];
}

Rational TimeGrid::StretchedEndpoint(std::int64_t k) const {
  return stretch_ * Endpoint(k);
}

TimeGrid::Interval TimeGrid::LocateInterval(const Rational& t,
                                            bool stretched) const {
  const std::vector<Rational>& points = stretched ? stretched_prefix_ : prefix_;
  const Rational scale = stretched ? stretch_ : Rational(1);
  if (t >= points.back()) {
    const Rational step = scale * pitch_[0];
    const Rational offset = t - points.back();
    const Rational left =
        points.back() + Rational(FloorDiv(offset, step), 1) * step;
    return {left, left + step, 0};
  }
  auto it = std::upper_bound(points.begin(), points.end(), t);
  const auto k = static_cast<std::size_t>(it - points.begin()) - 1;
  return {points[k], points[k + 1], prefix_group_[k]};
}

TimeGrid::Interval TimeGrid::IntervalAt(const Rational& t) const {
  return LocateInterval(t, false);
}

TimeGrid::Interval TimeGrid::StretchedIntervalAt(const Rational& t) const {
  return LocateInterval(t, true);
}

bool TimeGrid::InFineRegion(int group, const Rational& t) const {
  return group >= 1 && t >= p_circ_[group - 1];
}

bool TimeGrid::Contains(int group, const Rational& t) const {
  if (t.IsZero()) return true;
  if (t < p_circ_.back()) return false;
  const Interval interval = StretchedIntervalAt(t);
  if (InFineRegion(group, t)) {
    return IsMultipleOf(t - interval.left, pitch_[group]) &&
           t + largest_[group] < interval.right;
  }
  return t == interval.left;
}

Rational TimeGrid::Successor(int group, const Rational& t) const {
  if (t.IsZero()) return t;
  if (t <= p_circ_.back()) return p_circ_.back();
  const Interval interval = StretchedIntervalAt(t);
  if (InFineRegion(group, t)) {
    const Rational candidate =
        interval.left + CeilToMultipleOf(t - interval.left, pitch_[group]);
    if (candidate + largest_[group] < interval.right) return candidate;
    return interval.right;
  }
  return t == interval.left ? t : interval.right;
}

Rational TimeGrid::NextMember(int group, const Rational& t) const {
  if (t.IsZero()) return p_circ_.back();
  if (InFineRegion(group, t)) return Successor(group, t + pitch_[group]);
  return StretchedIntervalAt(t).right;
}

std::vector<int> TimeGrid::AllowedTypes(const Rational& t) const {
  std::vector<int> allowed;
  std::vector<int> verdict(gamma(), -1);
  for (int j = 0; j < static_cast<int>(group_of_.size()); ++j) {
    int& known = verdict[group_of_[j]];
    if (known < 0) known = Contains(group_of_[j], t) ? 1 : 0;
    if (known == 1) allowed.push_back(j);
  }
  return allowed;
}

double StratifiedRatioBound(int num_types, const Rational& epsilon) {
  const Rational one(1);
  const Rational bound =
      (one + epsilon) *
      (one + Rational(2 * num_types + 4) * (one + epsilon) * epsilon) *
      (one + Rational(5) * epsilon);
  return bound.ToDouble();
}

}  // namespace bernsched
