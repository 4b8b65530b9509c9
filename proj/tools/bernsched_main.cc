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

// Command line front end: instance generation, the two solvers, policy
// simulation, solver comparison, grid inspection and size rounding.
//
// Exit codes: 0 success, 1 bad input or I/O failure, 2 solver cap exceeded,
// 3 invariant violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "bernsched/baselines.h"
#include "bernsched/dp_exact.h"
#include "bernsched/dp_stratified.h"
#include "bernsched/harness.h"
#include "bernsched/instance.h"
#include "bernsched/io.h"
#include "bernsched/quasipoly.h"
#include "bernsched/replay.h"
#include "bernsched/timegrid.h"

namespace bernsched {
namespace {

using nlohmann::json;

constexpr int kExitInput = 1;
constexpr int kExitCap = 2;
constexpr int kExitInvariant = 3;

class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Rounded {
  GroupStructure groups;
  DivisibilityRounding rounding;
};

Rounded RoundAndGroup(const Instance& instance) {
  const GroupStructure groups = BuildGroups(instance);
  return {groups, RoundForDivisibility(instance, groups)};
}

Instance LoadInstance(const std::string& path) {
  return InstanceFromJson(ReadJsonFile(path));
}

void AddSeed(CLI::App* command, std::uint64_t* seed) {
  command->add_option("--seed", *seed, "Master seed")->capture_default_str();
}

void AddGeneratorOptions(CLI::App* command, ExperimentSpec* spec,
                         std::string* spec_file, std::string* scheme,
                         std::string* epsilon) {
  command->add_option("--spec", *spec_file,
                      "JSON experiment spec (flags override it)");
  command->add_option("--count", spec->count, "Number of instances");
  command->add_option("--types", spec->num_types, "Job types per instance");
  command->add_option("--max-jobs-per-type", spec->max_jobs_per_type);
  command->add_option("--max-jobs", spec->max_total_jobs, "Cap on N");
  command->add_option("--min-machines", spec->min_machines);
  command->add_option("--max-machines", spec->max_machines);
  command->add_option("--epsilon", *epsilon, "Epsilon as 1/E");
  command->add_option("--scheme", *scheme,
                      "separated | grouped | powers-of-c");
  command->add_option("--c", spec->c, "Base for powers-of-c sizes");
}

ExperimentSpec ResolveSpec(const CLI::App& command, ExperimentSpec flags,
                           const std::string& spec_file,
                           const std::string& scheme,
                           const std::string& epsilon, std::uint64_t seed) {
  ExperimentSpec spec =
      spec_file.empty() ? ExperimentSpec{} : SpecFromJson(ReadJsonFile(spec_file));
  auto given = [&command](const std::string& name) {
    return command.count(name) > 0;
  };
  if (given("--count")) spec.count = flags.count;
  if (given("--types")) spec.num_types = flags.num_types;
  if (given("--max-jobs-per-type")) {
    spec.max_jobs_per_type = flags.max_jobs_per_type;
  }
  if (given("--max-jobs")) spec.max_total_jobs = flags.max_total_jobs;
  if (given("--min-machines")) spec.min_machines = flags.min_machines;
  if (given("--max-machines")) spec.max_machines = flags.max_machines;
  if (given("--c")) spec.c = flags.c;
  if (given("--scheme")) spec.scheme = ParseSizeScheme(scheme);
  if (given("--epsilon")) {
    const Rational value = Rational::Parse(epsilon);
    if (value.numerator() != 1) {
      throw std::invalid_argument("--epsilon must be 1/E");
    }
    spec.inverse_epsilon = value.denominator().convert_to<std::int64_t>();
  }
  if (given("--seed") || spec_file.empty()) spec.seed = seed;
  return spec;
}

// A file holds one instance or a bundle {"instances": [...]}.
std::vector<Instance> LoadInstances(const std::string& path) {
  const json value = ReadJsonFile(path);
  std::vector<Instance> instances;
  if (value.contains("instances")) {
    for (const json& item : value.at("instances")) {
      instances.push_back(InstanceFromJson(item));
    }
  } else {
    instances.push_back(InstanceFromJson(value));
  }
  return instances;
}

void CheckCeilings(const Instance& instance, const GroupStructure& groups,
                   const StratifiedDiagnostics& diagnostics) {
  if (static_cast<double>(diagnostics.relevant_time_points) >
      TimePointCeiling(instance)) {
    throw InvariantViolation("relevant time points exceed N^n eps^-2n");
  }
  if (static_cast<double>(diagnostics.max_profiles_per_timepoint) >
      ProfileCeiling(instance, groups)) {
    throw InvariantViolation("profiles per time point exceed their ceiling");
  }
}

int Run(int argc, char** argv) {
  CLI::App app{"Scheduling Bernoulli jobs on identical machines"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;

  // gen
  CLI::App* gen = app.add_subcommand("gen", "Generate random instances");
  ExperimentSpec gen_flags;
  std::string gen_spec, gen_scheme = "separated", gen_epsilon = "1/13";
  std::string gen_out = "-";
  AddGeneratorOptions(gen, &gen_flags, &gen_spec, &gen_scheme, &gen_epsilon);
  gen->add_option("--out", gen_out, "Output file, - for stdout")
      ->capture_default_str();
  AddSeed(gen, &seed);

  // solve-exact
  CLI::App* exact_cmd = app.add_subcommand("solve-exact", "Optimal policy");
  std::string instance_path, policy_out, diagnostics_out;
  ExactOptions exact_options;
  exact_cmd->add_option("--instance", instance_path)->required();
  exact_cmd->add_option("--dump-policy", policy_out, "Write the policy table");
  exact_cmd->add_option("--max-jobs", exact_options.max_jobs)
      ->capture_default_str();
  AddSeed(exact_cmd, &seed);

  // solve-stratified
  CLI::App* strat_cmd =
      app.add_subcommand("solve-stratified", "Optimal stratified policy");
  StratifiedOptions strat_options;
  strat_cmd->add_option("--instance", instance_path)->required();
  strat_cmd->add_option("--dump-policy", policy_out, "Write the policy table");
  strat_cmd->add_option("--diagnostics", diagnostics_out,
                        "Write state-space diagnostics");
  strat_cmd->add_option("--max-states", strat_options.max_states)
      ->capture_default_str();
  AddSeed(strat_cmd, &seed);

  // simulate
  CLI::App* sim = app.add_subcommand("simulate", "Evaluate a policy");
  std::string policy_name = "exact";
  int trials = 100000;
  int threads = 0;
  bool enumerate = false;
  sim->add_option("--instance", instance_path)->required();
  sim->add_option("--policy", policy_name,
                  "exact | stratified | sept | fixed | quasipoly | file:P")
      ->capture_default_str();
  sim->add_option("--trials", trials)->capture_default_str();
  sim->add_option("--threads", threads, "0 uses all cores");
  sim->add_flag("--enumerate", enumerate, "Exact expectation by enumeration");
  AddSeed(sim, &seed);

  // compare
  CLI::App* cmp = app.add_subcommand("compare", "Exact vs stratified");
  ExperimentSpec cmp_flags;
  std::string cmp_spec, cmp_scheme = "separated", cmp_epsilon = "1/13";
  std::string instances_path, csv_out, json_out, violation_out;
  bool no_heuristics = false;
  cmp->add_option("--instances", instances_path,
                  "Instance or bundle file (otherwise generate)");
  AddGeneratorOptions(cmp, &cmp_flags, &cmp_spec, &cmp_scheme, &cmp_epsilon);
  cmp->add_option("--csv", csv_out, "CSV report");
  cmp->add_option("--json", json_out, "JSON report, - for stdout");
  cmp->add_option("--violation-out", violation_out,
                  "Where to write an instance that breaks the bound");
  cmp->add_option("--threads", threads, "0 uses all cores");
  cmp->add_flag("--no-heuristics", no_heuristics, "Skip SEPT and fixed");
  AddSeed(cmp, &seed);

  // grid-dump
  CLI::App* grid_cmd = app.add_subcommand("grid-dump", "Print the time grid");
  int members = 20;
  grid_cmd->add_option("--instance", instance_path)->required();
  grid_cmd->add_option("--members", members, "Q members listed per group")
      ->capture_default_str();
  AddSeed(grid_cmd, &seed);

  // round
  CLI::App* round_cmd = app.add_subcommand("round", "Round job sizes");
  std::string mode = "divisibility", round_out = "-";
  std::int64_t c = 169;
  round_cmd->add_option("--instance", instance_path)->required();
  round_cmd->add_option("--mode", mode, "divisibility | powers")
      ->capture_default_str();
  round_cmd->add_option("--c", c)->capture_default_str();
  round_cmd->add_option("--out", round_out)->capture_default_str();
  AddSeed(round_cmd, &seed);

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    const ExperimentSpec spec =
        ResolveSpec(*gen, gen_flags, gen_spec, gen_scheme, gen_epsilon, seed);
    json bundle = {{"spec", SpecToJson(spec)}, {"instances", json::array()}};
    for (const Instance& instance : Generate(spec)) {
      bundle["instances"].push_back(InstanceToJson(instance));
    }
    WriteJsonFile(gen_out, bundle);
    return 0;
  }

  if (exact_cmd->parsed()) {
    const Instance instance = LoadInstance(instance_path);
    const ExactSolution solution = SolveExact(instance, exact_options);
    if (!policy_out.empty()) {
      WriteJsonFile(policy_out, PolicyToJson(solution.policy));
    }
    WriteJsonFile("-", {{"value", solution.value},
                        {"states", solution.states},
                        {"policy_states", solution.policy.size()}});
    return 0;
  }

  if (strat_cmd->parsed()) {
    const Instance instance = LoadInstance(instance_path);
    const Rounded rounded = RoundAndGroup(instance);
    const Instance& work = rounded.rounding.instance;
    const TimeGrid grid(work, rounded.rounding.groups);
    const StratifiedSolution solution =
        SolveStratified(work, grid, strat_options);
    if (!policy_out.empty()) {
      WriteJsonFile(policy_out, PolicyToJson(solution.policy));
    }
    if (!diagnostics_out.empty()) {
      WriteJsonFile(diagnostics_out, DiagnosticsToJson(solution.diagnostics));
    }
    CheckCeilings(work, rounded.rounding.groups, solution.diagnostics);
    WriteJsonFile(
        "-", {{"value", solution.value},
              {"bound", StratifiedRatioBound(work.num_types(),
                                             work.epsilon())},
              {"rounded_instance", InstanceToJson(work)},
              {"diagnostics", DiagnosticsToJson(solution.diagnostics)}});
    return 0;
  }

  if (sim->parsed()) {
    Instance instance = LoadInstance(instance_path);
    std::unique_ptr<Policy> policy;
    // Units of the reported cost relative to the input instance.
    Rational unit(1);
    if (policy_name == "exact") {
      policy = std::make_unique<PolicyTable>(SolveExact(instance).policy);
    } else if (policy_name == "stratified") {
      const Rounded rounded = RoundAndGroup(instance);
      instance = rounded.rounding.instance;
      const TimeGrid grid(instance, rounded.rounding.groups);
      policy = std::make_unique<PolicyTable>(
          SolveStratified(instance, grid).policy);
    } else if (policy_name == "sept") {
      policy = MakeSeptPolicy(instance);
    } else if (policy_name == "fixed") {
      policy = std::make_unique<FixedAssignmentPolicy>(instance);
    } else if (policy_name == "quasipoly") {
      QuasiPolyOptions options;
      options.seed = seed;
      auto quasi = std::make_unique<QuasiPolyPolicy>(
          PlanQuasiPoly(instance, options));
      unit = quasi->plan().rounding.prescale;
      instance = quasi->instance();
      policy = std::move(quasi);
    } else if (policy_name.rfind("file:", 0) == 0) {
      auto table = std::make_unique<PolicyTable>(
          PolicyFromJson(ReadJsonFile(policy_name.substr(5))));
      if (table->kind() == "stratified") {
        instance = RoundAndGroup(instance).rounding.instance;
      }
      policy = std::move(table);
    } else {
      throw std::invalid_argument("unknown policy " + policy_name);
    }
    json result;
    if (enumerate) {
      result = {{"mean", ExpectedCostExact(*policy, instance) /
                             unit.ToDouble()},
                {"stderr", 0.0},
                {"method", "enum"}};
    } else {
      const MonteCarloResult mc =
          ExpectedCostMonteCarlo(*policy, instance, trials, seed, threads);
      result = {{"mean", mc.mean / unit.ToDouble()},
                {"stderr", mc.stderr_mean / unit.ToDouble()},
                {"method", "mc"},
                {"trials", mc.trials},
                {"seed", seed}};
    }
    result["policy"] = policy->name();
    WriteJsonFile("-", result);
    return 0;
  }

  if (cmp->parsed()) {
    std::vector<Instance> instances;
    if (!instances_path.empty()) {
      instances = LoadInstances(instances_path);
    } else {
      instances = Generate(ResolveSpec(*cmp, cmp_flags, cmp_spec, cmp_scheme,
                                       cmp_epsilon, seed));
    }
    CompareOptions options;
    options.threads = threads;
    options.heuristics = !no_heuristics;
    std::vector<ComparisonRow> rows;
    try {
      rows = Compare(instances, options);
    } catch (const BoundViolation& violation) {
      if (!violation_out.empty()) {
        WriteJsonFile(violation_out, violation.instance());
      }
      std::cerr << "bound violation: " << violation.what() << '\n'
                << violation.instance().dump() << '\n';
      return kExitInvariant;
    }
    if (!csv_out.empty()) {
      std::ofstream out(csv_out);
      if (!out) throw std::runtime_error("cannot write " + csv_out);
      WriteCsv(rows, out);
    }
    const json report = ReportToJson(rows);
    if (!json_out.empty()) WriteJsonFile(json_out, report);
    if (json_out != "-") WriteJsonFile("-", report.at("summary"));
    return 0;
  }

  if (grid_cmd->parsed()) {
    const Instance instance = LoadInstance(instance_path);
    const Rounded rounded = RoundAndGroup(instance);
    const TimeGrid grid(rounded.rounding.instance, rounded.rounding.groups);
    json groups = json::array();
    for (int h = 0; h < grid.gamma(); ++h) {
      json listed = json::array();
      Rational t(0);
      for (int k = 0; k < members; ++k) {
        listed.push_back(t.ToString());
        t = grid.NextMember(h, t);
      }
      json types = json::array();
      for (int j : rounded.rounding.groups.members[h]) types.push_back(j);
      groups.push_back({{"group", h},
                        {"types", types},
                        {"p_star", grid.p_star()[h].ToString()},
                        {"p_circ", grid.p_circ()[h].ToString()},
                        {"pitch", grid.pitch(h).ToString()},
                        {"q_members", listed}});
    }
    json endpoints = json::array();
    json stretched = json::array();
    for (std::size_t k = 0; k < grid.prefix_endpoints().size(); ++k) {
      endpoints.push_back(grid.prefix_endpoints()[k].ToString());
      stretched.push_back(
          grid.StretchedEndpoint(static_cast<std::int64_t>(k)).ToString());
    }
    WriteJsonFile("-", {{"rounded_instance",
                         InstanceToJson(rounded.rounding.instance)},
                        {"groups", groups},
                        {"endpoints", endpoints},
                        {"stretched_endpoints", stretched},
                        {"tail_pitch", grid.pitch(0).ToString()}});
    return 0;
  }

  if (round_cmd->parsed()) {
    const Instance instance = LoadInstance(instance_path);
    json result;
    if (mode == "divisibility") {
      const Rounded rounded = RoundAndGroup(instance);
      json merges = json::array();
      for (const TypeMerge& merge : rounded.rounding.merges) {
        merges.push_back({{"kept", merge.kept}, {"absorbed", merge.absorbed}});
      }
      result = {{"instance", InstanceToJson(rounded.rounding.instance)},
                {"type_map", rounded.rounding.type_map},
                {"merges", merges}};
    } else if (mode == "powers") {
      const PowerRounding rounded = RoundToPowersOfC(instance, c);
      result = {{"instance", InstanceToJson(rounded.instance)},
                {"prescale", rounded.prescale.ToString()},
                {"exponents", rounded.exponents},
                {"type_map", rounded.type_map}};
    } else {
      throw std::invalid_argument("unknown rounding mode " + mode);
    }
    WriteJsonFile(round_out, result);
    return 0;
  }
  return 0;
}

}  // namespace
}  // namespace bernsched

int main(int argc, char** argv) {
  try {
    return bernsched::Run(argc, argv);
  } catch (const bernsched::SolverCapExceeded& cap) {
    std::cerr << "error: " << cap.what() << " (" << cap.states()
              << " states)\n";
    return bernsched::kExitCap;
  } catch (const bernsched::InvariantViolation& violation) {
    std::cerr << "invariant violation: " << violation.what() << '\n';
    return bernsched::kExitInvariant;
  } catch (const std::logic_error& error) {
    // These derive from logic_error but signal bad input.
    if (dynamic_cast<const std::invalid_argument*>(&error) ||
        dynamic_cast<const std::domain_error*>(&error) ||
        dynamic_cast<const std::out_of_range*>(&error)) {
      std::cerr << "error: " << error.what() << '\n';
      return bernsched::kExitInput;
    }
    std::cerr << "invariant violation: " << error.what() << '\n';
    return bernsched::kExitInvariant;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return bernsched::kExitInput;
  }
}
