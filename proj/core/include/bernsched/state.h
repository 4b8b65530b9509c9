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

#ifndef BERNSCHED_STATE_H_
#define BERNSCHED_STATE_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bernsched/rational.h"

namespace bernsched {

// Sorted (non-decreasing) machine available-times.
class LoadProfile {
 public:
  LoadProfile() = default;
  explicit LoadProfile(int machines);
  explicit LoadProfile(std::vector<Rational> loads);

  int machines() const { return static_cast<int>(loads_.size()); }
  const std::vector<Rational>& loads() const { return loads_; }
  // t*, the earliest available time.
  const Rational& earliest() const { return loads_.front(); }

  // Replaces the first entry (a machine at t*) and restores the order.
  LoadProfile WithEarliestReplaced(const Rational& value) const;
  // Raises every entry below `target` to `target`.
  LoadProfile RaisedTo(const Rational& target) const;
  // Subtracts `offset` from every entry; all entries must be >= offset.
  LoadProfile Shifted(const Rational& offset) const;

  friend bool operator==(const LoadProfile&, const LoadProfile&) = default;

 private:
  std::vector<Rational> loads_;
};

// Remaining (not yet started) jobs per type.
using Leftover = std::vector<int>;

struct State {
  LoadProfile profile;
  Leftover leftover;

  friend bool operator==(const State&, const State&) = default;
};

struct StateHash {
  std::size_t operator()(const State& state) const;
};

bool IsEmpty(const Leftover& leftover);

// "[0,234]|[1,0]": profile entries as Rationals, then leftover counts.
std::string FormatState(const State& state);
State ParseState(std::string_view text);

// Thrown when a solver exceeds its configured size limits.
class SolverCapExceeded : public std::runtime_error {
 public:
  SolverCapExceeded(const std::string& what, std::size_t states)
      : std::runtime_error(what), states_(states) {}
  std::size_t states() const { return states_; }

 private:
  std::size_t states_;
};

}  // namespace bernsched

#endif  // BERNSCHED_STATE_H_
