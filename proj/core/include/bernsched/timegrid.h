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

#ifndef BERNSCHED_TIMEGRID_H_
#define BERNSCHED_TIMEGRID_H_

#include <cstdint>
#include <vector>

#include "bernsched/instance.h"
#include "bernsched/rational.h"

namespace bernsched {

// Interval endpoints, thresholds and allowed start times for a grouped
// instance. Groups are 0-based with group 0 holding the largest sizes.
//
// Unstretched endpoints: l_0 = 0, then for each group h from gamma-1 down to
// 1 the points p*_h + i * eps * p_h strictly below p*_{h-1} - eps * p_h, a
// midpoint splitting the remaining gap, and finally p*_0 + i * eps * p_0 for
// all i >= 0. Stretched endpoints are l'_k = (1 + 5 eps) l_k. Everything up to
// p*_0 is stored; the tail is evaluated in closed form.
//
// Q_h contains 0, the stretched endpoints in [p°_{gamma-1}, p°_{h-1}), and
// beyond p°_{h-1} the fine points l'_k + i * eps * p_h with
// l'_k + i * eps * p_h + pmax_h < l'_{k+1}. For h = 0 the second range is
// unbounded and there are no fine points.
class TimeGrid {
 public:
  struct Interval {
    Rational left;
    Rational right;
    int group = -1;  // -1 for the first interval [0, l_1)
  };

  // `instance` should already be rounded for divisibility; the grid is built
  // for any grouped instance but the fine points then need not nest.
  TimeGrid(const Instance& instance, const GroupStructure& groups);

  int gamma() const { return static_cast<int>(p_star_.size()); }
  const Rational& epsilon() const { return epsilon_; }
  const Rational& stretch() const { return stretch_; }
  const std::vector<Rational>& p_star() const { return p_star_; }
  const std::vector<Rational>& p_circ() const { return p_circ_; }
  const Rational& pitch(int group) const { return pitch_[group]; }
  const Rational& largest(int group) const { return largest_[group]; }
  int group_of(int type) const { return group_of_[type]; }

  // l_0 .. l_K with l_K = p*_0, and the group label of [l_k, l_{k+1}).
  const std::vector<Rational>& prefix_endpoints() const { return prefix_; }
  const std::vector<int>& prefix_groups() const { return prefix_group_; }

  // l_k and l'_k for any k >= 0, including the tail.
  Rational Endpoint(std::int64_t k) const;
  Rational StretchedEndpoint(std::int64_t k) const;

  // The interval [l_k, l_{k+1}) or [l'_k, l'_{k+1}) that contains t.
  Interval IntervalAt(const Rational& t) const;
  Interval StretchedIntervalAt(const Rational& t) const;

  bool Contains(int group, const Rational& t) const;
  // Smallest member of Q_group that is >= t.
  Rational Successor(int group, const Rational& t) const;
  // Smallest member of Q_group that is > t; t must itself be a member.
  Rational NextMember(int group, const Rational& t) const;
  // Types j with t in Q_{G(j)}, ascending.
  std::vector<int> AllowedTypes(const Rational& t) const;

 private:
  Interval LocateInterval(const Rational& t, bool stretched) const;
  bool InFineRegion(int group, const Rational& t) const;

  Rational epsilon_;
  Rational stretch_;
  std::vector<Rational> p_star_;
  std::vector<Rational> p_circ_;
  std::vector<Rational> pitch_;
  std::vector<Rational> largest_;
  std::vector<int> group_of_;
  std::vector<Rational> prefix_;
  std::vector<Rational> stretched_prefix_;
  std::vector<int> prefix_group_;
};

// B(n, eps) = (1 + eps)(1 + (2n + 4)(1 + eps) eps)(1 + 5 eps): the factor by
// which an optimal stratified policy on the rounded instance may exceed the
// optimum on the original one.
double StratifiedRatioBound(int num_types, const Rational& epsilon);

}  // namespace bernsched

#endif  // BERNSCHED_TIMEGRID_H_
