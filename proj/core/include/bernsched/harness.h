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

#ifndef BERNSCHED_HARNESS_H_
#define BERNSCHED_HARNESS_H_

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bernsched/dp_exact.h"
#include "bernsched/dp_stratified.h"
#include "bernsched/instance.h"

namespace bernsched {

enum class SizeScheme {
  kSeparated,  // one type per group: p_{j+1} <= eps^2 p_j
  kGrouped,    // clusters of nearby sizes, clusters eps^2-separated
  kPowersOfC,  // sizes c^k
};

SizeScheme ParseSizeScheme(const std::string& name);
std::string SizeSchemeName(SizeScheme scheme);

struct ExperimentSpec {
  int count = 10;
  int num_types = 2;
  int max_jobs_per_type = 3;
  int max_total_jobs = 6;
  int min_machines = 1;
  int max_machines = 3;
  std::int64_t inverse_epsilon = 13;
  SizeScheme scheme = SizeScheme::kSeparated;
  std::int64_t c = 169;
  // Probabilities are k / q_steps for k drawn uniformly from
  // [q_min_step, q_steps].
  int q_steps = 20;
  int q_min_step = 1;
  std::uint64_t seed = 1;
};

ExperimentSpec SpecFromJson(const nlohmann::json& json);
nlohmann::json SpecToJson(const ExperimentSpec& spec);

// Instance i is drawn from SeedStream(spec.seed, i). Throws
// std::invalid_argument on an infeasible spec.
std::vector<Instance> Generate(const ExperimentSpec& spec);
Instance GenerateOne(const ExperimentSpec& spec, std::uint64_t index);

struct CompareOptions {
  ExactOptions exact;
  StratifiedOptions stratified;
  bool heuristics = true;
  int threads = 0;  // 0: hardware concurrency
};

struct ComparisonRow {
  int id = 0;
  int machines = 0;
  int types = 0;
  int jobs = 0;
  bool skipped = false;
  std::string skip_reason;
  double exact = 0.0;
  double stratified = 0.0;
  double ratio = 0.0;
  double bound = 0.0;
  double sept = 0.0;
  double fixed = 0.0;
  std::size_t exact_states = 0;
  std::size_t stratified_states = 0;
  std::size_t relevant_time_points = 0;
  std::size_t max_profiles_per_timepoint = 0;
  double exact_ms = 0.0;
  double stratified_ms = 0.0;
};

// Raised when a stratified value falls outside [exact, B * exact].
class BoundViolation : public std::runtime_error {
 public:
  BoundViolation(const std::string& what, nlohmann::json instance)
      : std::runtime_error(what), instance_(std::move(instance)) {}
  const nlohmann::json& instance() const { return instance_; }

 private:
  nlohmann::json instance_;
};

// Solves each instance exactly and with the stratified program (after
// divisibility rounding). Rows come back in input order; instances beyond a
// solver cap are marked skipped.
ComparisonRow CompareOne(const Instance& instance, int id,
                         const CompareOptions& options);
std::vector<ComparisonRow> Compare(const std::vector<Instance>& instances,
                                   const CompareOptions& options = {});

struct ComparisonSummary {
  int rows = 0;
  int skipped = 0;
  double max_ratio = 0.0;
  std::size_t max_exact_states = 0;
  std::size_t max_stratified_states = 0;
};

ComparisonSummary Summarize(const std::vector<ComparisonRow>& rows);

void WriteCsv(const std::vector<ComparisonRow>& rows, std::ostream& out);
// {"rows": [...], "summary": {...}}
nlohmann::json ReportToJson(const std::vector<ComparisonRow>& rows);

}  // namespace bernsched

#endif  // BERNSCHED_HARNESS_H_
