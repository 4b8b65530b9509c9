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

#include "bernsched/io.h"

#include <fstream>
#include <iostream>
#include <limits>
#include <stdexcept>

namespace bernsched {

using nlohmann::json;

json InstanceToJson(const Instance& instance) {
  json types = json::array();
  for (const JobType& type : instance.types) {
    types.push_back({{"size", type.size.ToString()},
                     {"jobs", type.probabilities}});
  }
  return {{"machines", instance.machines},
          {"epsilon", "1/" + std::to_string(instance.inverse_epsilon)},
          {"types", std::move(types)}};
}

namespace {

std::int64_t ParseInverseEpsilon(const json& value) {
  const Rational epsilon = value.is_string()
                               ? Rational::Parse(value.get<std::string>())
                               : Rational::FromDouble(value.get<double>());
  if (epsilon.IsZero() || epsilon.numerator() != 1 ||
      epsilon.denominator() > std::numeric_limits<std::int64_t>::max()) {
    throw std::invalid_argument("epsilon must be 1/E for an integer E >= 2");
  }
  return epsilon.denominator().convert_to<std::int64_t>();
}

Rational ParseTime(const json& value) {
  if (value.is_string()) return Rational::Parse(value.get<std::string>());
  if (value.is_number_unsigned() || value.is_number_integer()) {
    return Rational(value.get<std::int64_t>());
  }
  throw std::invalid_argument("expected a \"num/den\" string, got " +
                              value.dump());
}

}  // namespace

Instance InstanceFromJson(const json& value) {
  Instance raw;
  raw.machines = value.at("machines").get<int>();
  raw.inverse_epsilon =
      value.contains("epsilon") ? ParseInverseEpsilon(value.at("epsilon")) : 13;
  for (const json& type : value.at("types")) {
    raw.types.push_back({ParseTime(type.at("size")),
                         type.at("jobs").get<std::vector<double>>()});
  }
  return Canonicalize(std::move(raw));
}

json PolicyToJson(const PolicyTable& policy) {
  json states = json::object();
  for (const auto& [state, decision] : policy.decisions()) {
    json entry;
    if (decision.kind == DecisionKind::kAdvance) {
      entry["type"] = "idle";
    } else if (decision.kind == DecisionKind::kStart) {
      entry["type"] = decision.type;
      if (decision.index >= 0) entry["index"] = decision.index;
    } else {
      throw std::logic_error("tables cannot retire machines");
    }
    entry["next"] = decision.time.ToString();
    states[FormatState(state)] = std::move(entry);
  }
  return {{"kind", policy.kind()},
          {"machines", policy.machines()},
          {"states", std::move(states)}};
}

PolicyTable PolicyFromJson(const json& value) {
  PolicyTable::Map decisions;
  const int machines = value.at("machines").get<int>();
  for (const auto& [key, entry] : value.at("states").items()) {
    State state = ParseState(key);
    if (state.profile.machines() != machines) {
      throw std::invalid_argument("policy state " + key +
                                  " has the wrong number of machines");
    }
    const Rational next = ParseTime(entry.at("next"));
    const json& type = entry.at("type");
    Decision decision;
    if (type == "idle") {
      decision = Decision::Advance(next);
    } else if (type.is_number_integer()) {
      decision = Decision::Start(type.get<int>(), next, entry.value("index", -1));
    } else {
      throw std::invalid_argument("unknown decision " + type.dump());
    }
    decisions.emplace(std::move(state), std::move(decision));
  }
  return PolicyTable(value.value("kind", std::string("file")), machines,
                     std::move(decisions));
}

json DiagnosticsToJson(const StratifiedDiagnostics& diagnostics) {
  return {{"relevant_time_points", diagnostics.relevant_time_points},
          {"max_profiles_per_timepoint",
           diagnostics.max_profiles_per_timepoint},
          {"states", diagnostics.states}};
}

json ScheduleToJson(const Schedule& schedule) {
  json jobs = json::array();
  for (const ScheduledJob& entry : schedule.entries) {
    jobs.push_back({{"type", entry.job.type},
                    {"index", entry.job.index},
                    {"machine", entry.machine},
                    {"start", entry.start.ToString()},
                    {"completion", entry.completion.ToString()},
                    {"long", entry.is_long}});
  }
  return {{"jobs", std::move(jobs)},
          {"total", schedule.TotalCost().ToString()}};
}

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& error) {
    throw std::runtime_error(path + ": " + error.what());
  }
}

void WriteJsonFile(const std::string& path, const json& value) {
  if (path == "-") {
    std::cout << value.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << value.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace bernsched
