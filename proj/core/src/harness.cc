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

#include "bernsched/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include "bernsched/baselines.h"
#include "bernsched/io.h"
#include "bernsched/replay.h"
#include "bernsched/seed_stream.h"
#include "bernsched/timegrid.h"

namespace bernsched {

using nlohmann::json;

SizeScheme ParseSizeScheme(const std::string& name) {
  if (name == "separated") return SizeScheme::kSeparated;
  if (name == "grouped") return SizeScheme::kGrouped;
  if (name == "powers-of-c") return SizeScheme::kPowersOfC;
  throw std::invalid_argument("unknown size scheme: " + name);
}

std::string SizeSchemeName(SizeScheme scheme) {
  switch (scheme) {
    case SizeScheme::kSeparated:
      return "separated";
    case SizeScheme::kGrouped:
      return "grouped";
    case SizeScheme::kPowersOfC:
      return "powers-of-c";
  }
  return "unknown";
}

ExperimentSpec SpecFromJson(const json& value) {
  ExperimentSpec spec;
  spec.count = value.value("count", spec.count);
  spec.num_types = value.value("num_types", spec.num_types);
  spec.max_jobs_per_type =
      value.value("max_jobs_per_type", spec.max_jobs_per_type);
  spec.max_total_jobs = value.value("max_total_jobs", spec.max_total_jobs);
  spec.min_machines = value.value("min_machines", spec.min_machines);
  spec.max_machines = value.value("max_machines", spec.max_machines);
  spec.inverse_epsilon = value.value("inverse_epsilon", spec.inverse_epsilon);
  spec.scheme =
      ParseSizeScheme(value.value("scheme", SizeSchemeName(spec.scheme)));
  spec.c = value.value("c", spec.c);
  spec.q_steps = value.value("q_steps", spec.q_steps);
  spec.q_min_step = value.value("q_min_step", spec.q_min_step);
  spec.seed = value.value("seed", spec.seed);
  return spec;
}

json SpecToJson(const ExperimentSpec& spec) {
  return {{"count", spec.count},
          {"num_types", spec.num_types},
          {"max_jobs_per_type", spec.max_jobs_per_type},
          {"max_total_jobs", spec.max_total_jobs},
          {"min_machines", spec.min_machines},
          {"max_machines", spec.max_machines},
          {"inverse_epsilon", spec.inverse_epsilon},
          {"scheme", SizeSchemeName(spec.scheme)},
          {"c", spec.c},
          {"q_steps", spec.q_steps},
          {"q_min_step", spec.q_min_step},
          {"seed", spec.seed}};
}

namespace {

void Validate(const ExperimentSpec& spec) {
  auto fail = [](const std::string& what) {
    throw std::invalid_argument("experiment spec: " + what);
  };
  if (spec.count < 0) fail("negative count");
  if (spec.num_types < 1) fail("need at least one type");
  if (spec.max_jobs_per_type < 1) fail("need at least one job per type");
  if (spec.max_total_jobs < spec.num_types) fail("max_total_jobs < num_types");
  if (spec.min_machines < 1 || spec.max_machines < spec.min_machines) {
    fail("bad machine range");
  }
  if (spec.inverse_epsilon < 2) fail("epsilon must be 1/E with E >= 2");
  if (spec.scheme == SizeScheme::kGrouped && spec.inverse_epsilon < 3) {
    fail("grouped sizes need E >= 3");
  }
  if (spec.scheme == SizeScheme::kPowersOfC && spec.c < 2) fail("c < 2");
  if (spec.q_steps < 1 || spec.q_min_step < 1 ||
      spec.q_min_step > spec.q_steps) {
    fail("bad probability grid");
  }
}

std::int64_t Draw(SeedStream& rng, std::int64_t low, std::int64_t high) {
  return std::uniform_int_distribution<std::int64_t>(low, high)(rng);
}

std::vector<Rational> SeparatedSizes(const ExperimentSpec& spec,
                                     SeedStream& rng) {
  const std::int64_t e2 = spec.inverse_epsilon * spec.inverse_epsilon;
  std::vector<Rational> sizes{Rational(Draw(rng, 1, 3))};
  while (static_cast<int>(sizes.size()) < spec.num_types) {
    sizes.push_back(sizes.back() * Rational(Draw(rng, e2, 3 * e2)));
  }
  std::reverse(sizes.begin(), sizes.end());
  const Rational eps_sq(BigInt(1), BigInt(e2));
  for (std::size_t j = 1; j < sizes.size(); ++j) {
    if (sizes[j] > eps_sq * sizes[j - 1]) {
      throw std::logic_error("generated sizes are not separated");
    }
  }
  return sizes;
}

std::vector<Rational> GroupedSizes(const ExperimentSpec& spec,
                                   SeedStream& rng) {
  const std::int64_t e = spec.inverse_epsilon;
  std::vector<int> group_sizes{1};
  for (int j = 1; j < spec.num_types; ++j) {
    if (Draw(rng, 0, 1) == 0) {
      ++group_sizes.back();
    } else {
      group_sizes.push_back(1);
    }
  }
  // Built from the smallest group upwards.
  std::vector<Rational> sizes;
  Rational rep(e * Draw(rng, 1, 3));
  for (std::size_t g = 0; g < group_sizes.size(); ++g) {
    if (g > 0) {
      // An offset that is not a multiple of the lower representative
      // makes the divisibility rounding move it.
      rep = rep * Rational(Draw(rng, 5 * e * e, 6 * e * e)) +
            Rational(Draw(rng, 0, e - 1)) * rep / Rational(e);
    }
    std::vector<Rational> members{rep};
    while (static_cast<int>(members.size()) < group_sizes[g]) {
      const Rational candidate =
          rep + Rational(Draw(rng, 1, 3)) * rep * Rational(Draw(rng, 1, 97)) /
                    Rational(97);
      if (std::find(members.begin(), members.end(), candidate) ==
          members.end()) {
        members.push_back(candidate);
      }
    }
    sizes.insert(sizes.end(), members.begin(), members.end());
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

std::vector<Rational> PowerSizes(const ExperimentSpec& spec, SeedStream& rng) {
  std::vector<int> exponents(spec.num_types + 2);
  for (int k = 0; k < static_cast<int>(exponents.size()); ++k) {
    exponents[k] = k;
  }
  std::shuffle(exponents.begin(), exponents.end(), rng);
  exponents.resize(spec.num_types);
  std::sort(exponents.begin(), exponents.end(), std::greater<>());
  std::vector<Rational> sizes;
  for (int k : exponents) sizes.push_back(Pow(Rational(spec.c), k));
  return sizes;
}

}  // namespace

Instance GenerateOne(const ExperimentSpec& spec, std::uint64_t index) {
  Validate(spec);
  SeedStream rng(spec.seed, index);
  Instance instance;
  instance.machines =
      static_cast<int>(Draw(rng, spec.min_machines, spec.max_machines));
  instance.inverse_epsilon = spec.inverse_epsilon;
  std::vector<Rational> sizes;
  switch (spec.scheme) {
    case SizeScheme::kSeparated:
      sizes = SeparatedSizes(spec, rng);
      break;
    case SizeScheme::kGrouped:
      sizes = GroupedSizes(spec, rng);
      break;
    case SizeScheme::kPowersOfC:
      sizes = PowerSizes(spec, rng);
      break;
  }
  std::vector<int> counts;
  int total = 0;
  for (int j = 0; j < spec.num_types; ++j) {
    counts.push_back(static_cast<int>(Draw(rng, 1, spec.max_jobs_per_type)));
    total += counts.back();
  }
  while (total > spec.max_total_jobs) {
    auto widest = std::max_element(counts.begin(), counts.end());
    --*widest;
    --total;
  }
  for (int j = 0; j < spec.num_types; ++j) {
    JobType type{sizes[j], {}};
    for (int k = 0; k < counts[j]; ++k) {
      type.probabilities.push_back(
          static_cast<double>(Draw(rng, spec.q_min_step, spec.q_steps)) /
          spec.q_steps);
    }
    instance.types.push_back(std::move(type));
  }
  return Canonicalize(std::move(instance));
}

std::vector<Instance> Generate(const ExperimentSpec& spec) {
  Validate(spec);
  std::vector<Instance> instances;
  for (int i = 0; i < spec.count; ++i) {
    instances.push_back(GenerateOne(spec, static_cast<std::uint64_t>(i)));
  }
  return instances;
}

namespace {

double Milliseconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - since)
      .count();
}

double HeuristicCost(const Policy& policy, const Instance& instance) {
  int random_jobs = 0;
  for (const JobRef& job : instance.jobs()) {
    random_jobs += instance.probability(job) < 1.0;
  }
  if (random_jobs <= 20) return ExpectedCostExact(policy, instance);
  return ExpectedCostMonteCarlo(policy, instance, 20000, 0, 1).mean;
}

}  // namespace

ComparisonRow CompareOne(const Instance& instance, int id,
                         const CompareOptions& options) {
  ComparisonRow row;
  row.id = id;
  row.machines = instance.machines;
  row.types = instance.num_types();
  row.jobs = instance.num_jobs();
  try {
    auto start = std::chrono::steady_clock::now();
    const ExactSolution exact = SolveExact(instance, options.exact);
    row.exact_ms = Milliseconds(start);
    row.exact = exact.value;
    row.exact_states = exact.states;

    start = std::chrono::steady_clock::now();
    const GroupStructure groups = BuildGroups(instance);
    const DivisibilityRounding rounded = RoundForDivisibility(instance, groups);
    const TimeGrid grid(rounded.instance, rounded.groups);
    const StratifiedSolution stratified =
        SolveStratified(rounded.instance, grid, options.stratified);
    row.stratified_ms = Milliseconds(start);
    row.stratified = stratified.value;
    row.stratified_states = stratified.diagnostics.states;
    row.relevant_time_points = stratified.diagnostics.relevant_time_points;
    row.max_profiles_per_timepoint =
        stratified.diagnostics.max_profiles_per_timepoint;
    row.bound = StratifiedRatioBound(rounded.instance.num_types(),
                                     instance.epsilon());
  } catch (const SolverCapExceeded& cap) {
    row.skipped = true;
    row.skip_reason = cap.what();
    return row;
  }
  row.ratio = row.exact > 0.0 ? row.stratified / row.exact : 1.0;
  if (row.ratio < 1.0 - 1e-9 || row.ratio > row.bound + 1e-9) {
    std::ostringstream what;
    what << std::setprecision(17) << "instance " << id << ": stratified "
         << row.stratified << " vs exact " << row.exact << " (ratio "
         << row.ratio << ", bound " << row.bound << ")";
    throw BoundViolation(what.str(), InstanceToJson(instance));
  }
  if (options.heuristics) {
    row.sept = HeuristicCost(*MakeSeptPolicy(instance), instance);
    row.fixed = HeuristicCost(FixedAssignmentPolicy(instance), instance);
  }
  return row;
}

std::vector<ComparisonRow> Compare(const std::vector<Instance>& instances,
                                   const CompareOptions& options) {
  const int count = static_cast<int>(instances.size());
  std::vector<ComparisonRow> rows(count);
  std::vector<std::exception_ptr> errors(count);
  int threads = options.threads > 0
                    ? options.threads
                    : static_cast<int>(
                          std::max(1u, std::thread::hardware_concurrency()));
  threads = std::max(1, std::min(threads, count));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        rows[i] = CompareOne(instances[i], i, options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> workers;
    for (int w = 0; w < threads; ++w) workers.emplace_back(work);
    for (std::thread& worker : workers) worker.join();
  }
  for (const std::exception_ptr& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return rows;
}

ComparisonSummary Summarize(const std::vector<ComparisonRow>& rows) {
  ComparisonSummary summary;
  for (const ComparisonRow& row : rows) {
    ++summary.rows;
    if (row.skipped) {
      ++summary.skipped;
      continue;
    }
    summary.max_ratio = std::max(summary.max_ratio, row.ratio);
    summary.max_exact_states =
        std::max(summary.max_exact_states, row.exact_states);
    summary.max_stratified_states =
        std::max(summary.max_stratified_states, row.stratified_states);
  }
  return summary;
}

void WriteCsv(const std::vector<ComparisonRow>& rows, std::ostream& out) {
  out << "id,machines,types,jobs,skipped,exact,stratified,ratio,bound,sept,"
         "fixed,exact_states,stratified_states,relevant_time_points,"
         "max_profiles_per_timepoint,exact_ms,stratified_ms\n";
  out << std::setprecision(17);
  for (const ComparisonRow& row : rows) {
    out << row.id << ',' << row.machines << ',' << row.types << ','
        << row.jobs << ',' << (row.skipped ? 1 : 0) << ',' << row.exact << ','
        << row.stratified << ',' << row.ratio << ',' << row.bound << ','
        << row.sept << ',' << row.fixed << ',' << row.exact_states << ','
        << row.stratified_states << ',' << row.relevant_time_points << ','
        << row.max_profiles_per_timepoint << ',' << row.exact_ms << ','
        << row.stratified_ms << '\n';
  }
}

json ReportToJson(const std::vector<ComparisonRow>& rows) {
  json items = json::array();
  for (const ComparisonRow& row : rows) {
    json item = {{"id", row.id},
                 {"machines", row.machines},
                 {"types", row.types},
                 {"jobs", row.jobs},
                 {"skipped", row.skipped}};
    if (row.skipped) {
      item["skip_reason"] = row.skip_reason;
    } else {
      item.update({{"exact", row.exact},
                   {"stratified", row.stratified},
                   {"ratio", row.ratio},
                   {"bound", row.bound},
                   {"sept", row.sept},
                   {"fixed", row.fixed},
                   {"exact_states", row.exact_states},
                   {"stratified_states", row.stratified_states},
                   {"relevant_time_points", row.relevant_time_points},
                   {"max_profiles_per_timepoint",
                    row.max_profiles_per_timepoint},
                   {"exact_ms", row.exact_ms},
                   {"stratified_ms", row.stratified_ms}});
    }
    items.push_back(std::move(item));
  }
  const ComparisonSummary summary = Summarize(rows);
  return {{"rows", std::move(items)},
          {"summary",
           {{"rows", summary.rows},
            {"skipped", summary.skipped},
            {"max_ratio", summary.max_ratio},
            {"max_exact_states", summary.max_exact_states},
            {"max_stratified_states", summary.max_stratified_states}}}};
}

}  // namespace bernsched
