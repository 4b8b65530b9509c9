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

#ifndef BERNSCHED_IO_H_
#define BERNSCHED_IO_H_

#include <string>

#include <nlohmann/json.hpp>

#include "bernsched/dp_stratified.h"
#include "bernsched/instance.h"
#include "bernsched/policy.h"
#include "bernsched/replay.h"

namespace bernsched {

// {"machines": m, "epsilon": "1/E",
//  "types": [{"size": "num/den", "jobs": [q, ...]}, ...]}
// Parsing canonicalizes; types may appear in any order.
nlohmann::json InstanceToJson(const Instance& instance);
Instance InstanceFromJson(const nlohmann::json& json);

// {"kind": ..., "machines": m,
//  "states": {"[0,234]|[1,0]": {"type": j, "next": "t"}, ...}}
// An idle advance is written as {"type": "idle", "next": target}; explicit
// job indices as an extra "index" field.
nlohmann::json PolicyToJson(const PolicyTable& policy);
PolicyTable PolicyFromJson(const nlohmann::json& json);

nlohmann::json DiagnosticsToJson(const StratifiedDiagnostics& diagnostics);
nlohmann::json ScheduleToJson(const Schedule& schedule);

nlohmann::json ReadJsonFile(const std::string& path);
// Pretty-printed with a trailing newline; "-" writes to stdout.
void WriteJsonFile(const std::string& path, const nlohmann::json& json);

}  // namespace bernsched

#endif  // BERNSCHED_IO_H_
