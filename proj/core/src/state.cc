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

#include "bernsched/state.h"

#include <algorithm>
#include <sstream>

namespace bernsched {

LoadProfile::LoadProfile(int machines) : loads_(machines, Rational(0)) {
  if (machines < 1) throw std::invalid_argument("profile: no machines");
}

LoadProfile::LoadProfile(std::vector<Rational> loads) : loads_(std::move(loads)) {
  if (loads_.empty()) throw std::invalid_argument("profile: no machines");
  std::sort(loads_.begin(), loads_.end());
}

LoadProfile LoadProfile::WithEarliestReplaced(const Rational& value) const {
  LoadProfile result = *this;
  auto& loads = result.loads_;
  loads.front() = value;
  // Only the first entry moved; bubble it into place.
  for (std::size_t i = 1; i < loads.size() && loads[i] < loads[i - 1]; ++i) {
    std::swap(loads[i], loads[i - 1]);
  }
  return result;
}

LoadProfile LoadProfile::RaisedTo(const Rational& target) const {
  LoadProfile result = *this;
  for (Rational& load : result.loads_) {
    if (load < target) load = target;
  }
  return result;
}

LoadProfile LoadProfile::Shifted(const Rational& offset) const {
  LoadProfile result = *this;
  for (Rational& load : result.loads_) load -= offset;
  return result;
}

std::size_t StateHash::operator()(const State& state) const {
  std::size_t seed = state.leftover.size();
  auto mix = [&seed](std::size_t value) {
    seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  };
  for (const Rational& load : state.profile.loads()) mix(load.Hash());
  for (int count : state.leftover) mix(static_cast<std::size_t>(count));
  return seed;
}

bool IsEmpty(const Leftover& leftover) {
  return std::all_of(leftover.begin(), leftover.end(),
                     [](int count) { return count == 0; });
}

std::string FormatState(const State& state) {
  std::ostringstream out;
  out << '[';
  const auto& loads = state.profile.loads();
  for (std::size_t i = 0; i < loads.size(); ++i) {
    out << (i ? "," : "") << loads[i];
  }
  out << "]|[";
  for (std::size_t i = 0; i < state.leftover.size(); ++i) {
    out << (i ? "," : "") << state.leftover[i];
  }
  out << ']';
  return out.str();
}

namespace {

std::vector<std::string_view> SplitList(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw std::invalid_argument("state: expected a bracketed list");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<std::string_view> items;
  if (text.empty()) return items;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    items.push_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

}  // namespace

State ParseState(std::string_view text) {
  const std::size_t bar = text.find('|');
  if (bar == std::string_view::npos) {
    throw std::invalid_argument("state: missing '|' in " + std::string(text));
  }
  std::vector<Rational> loads;
  for (std::string_view item : SplitList(text.substr(0, bar))) {
    loads.push_back(Rational::Parse(item));
  }
  State state{LoadProfile(std::move(loads)), {}};
  for (std::string_view item : SplitList(text.substr(bar + 1))) {
    state.leftover.push_back(std::stoi(std::string(item)));
    if (state.leftover.back() < 0) {
      throw std::invalid_argument("state: negative leftover count");
    }
  }
  return state;
}

}  // namespace bernsched
