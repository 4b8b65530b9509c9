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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bernsched/baselines.h"
#include "bernsched/dp_exact.h"
#include "bernsched/dp_stratified.h"
#include "bernsched/harness.h"
#include "bernsched/instance.h"
#include "bernsched/io.h"
#include "bernsched/replay.h"
#include "bernsched/seed_stream.h"
#include "bernsched/timegrid.h"
#include "support/oracles.h"

namespace bernsched {
namespace {

// Tolerances.
constexpr double kValueTol = 1e-9;       // absolute, on expected costs
constexpr double kRelativeTol = 1e-9;    // relative, on scaled values
constexpr double kMonteCarloSigmas = 4;  // allowed deviation in stderr units

// Suite sizes.
constexpr int kRandomOracleInstances = 200;
constexpr int kIdlingInstances = 100;
constexpr int kListInstances = 100;
constexpr int kSandwichInstances = 100;
constexpr int kGridSamples = 1000;
constexpr int kScaleInstances = 20;
constexpr int kRoundingInstances = 50;
constexpr int kMonteCarloInstances = 10;
constexpr int kMonteCarloTrials = 100000;

struct Outcome {
  bool pass = true;
  std::string detail;
  int checks = 0;

  void Require(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string Num(double value) {
  std::ostringstream out;
  out.precision(12);
  out << value;
  return out.str();
}

bool Near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// --- shared suites ---------------------------------------------------------

struct Prepared {
  Instance raw;
  Instance rounded;
  GroupStructure groups;
};

Prepared Prepare(const Instance& raw) {
  DivisibilityRounding r = RoundForDivisibility(raw, BuildGroups(raw));
  return {raw, std::move(r.instance), std::move(r.groups)};
}

// n <= 2, eps^2-separated sizes, N <= 6, m <= 3, eps = 1/13.
std::vector<Instance> SandwichSuite() {
  ExperimentSpec spec;
  spec.num_types = 2;
  spec.max_jobs_per_type = 4;
  spec.max_total_jobs = 6;
  spec.max_machines = 3;
  spec.inverse_epsilon = 13;
  spec.scheme = SizeScheme::kSeparated;
  spec.seed = 4001;
  spec.count = kSandwichInstances * 4 / 5;
  std::vector<Instance> suite = Generate(spec);
  spec.num_types = 1;
  spec.max_jobs_per_type = 6;
  spec.seed = 4002;
  spec.count = kSandwichInstances - spec.count;
  for (Instance& instance : Generate(spec)) suite.push_back(std::move(instance));
  return suite;
}

struct SandwichCase {
  Prepared prepared;
  ExactSolution exact;
  StratifiedSolution stratified;
};

const std::vector<SandwichCase>& SandwichCases() {
  static const std::vector<SandwichCase> cases = [] {
    std::vector<SandwichCase> out;
    for (const Instance& raw : SandwichSuite()) {
      Prepared prepared = Prepare(raw);
      const TimeGrid grid(prepared.rounded, prepared.groups);
      ExactSolution exact = SolveExact(raw);
      StratifiedSolution stratified = SolveStratified(prepared.rounded, grid);
      out.push_back({std::move(prepared), std::move(exact), std::move(stratified)});
    }
    return out;
  }();
  return cases;
}

Instance OneTypeExample() {
  Instance raw;
  raw.types.push_back({Rational(169), {1.0, 1.0}});
  return Canonicalize(raw);
}

// --- criteria --------------------------------------------------------------

Outcome OracleEquivalence() {
  Outcome out;
  double worst = 0.0;
  for (const Instance& instance : testing::EnumerateInstances(
           {1, 3, 9}, {0.25, 0.5, 1.0}, 4, {1, 2})) {
    const double dp = SolveExact(instance).value;
    const double brute = BruteForceOracle(instance);
    worst = std::max(worst, std::abs(dp - brute));
    out.Require(Near(dp, brute, kValueTol),
                "exhaustive mismatch " + Num(dp) + " vs " + Num(brute));
  }
  const int exhaustive = out.checks;
  for (int i = 0; i < kRandomOracleInstances; ++i) {
    const Instance instance =
        testing::RandomSmallInstance(1001, i, {1, 2, 3, 5, 8, 13}, 5, 3);
    const double dp = SolveExact(instance).value;
    const double brute = BruteForceOracle(instance);
    worst = std::max(worst, std::abs(dp - brute));
    out.Require(Near(dp, brute, kValueTol), "random instance " +
                                                std::to_string(i) + ": " +
                                                Num(dp) + " vs " + Num(brute));
  }
  if (out.pass) {
    out.detail = std::to_string(exhaustive) + " exhaustive + " +
                 std::to_string(kRandomOracleInstances) +
                 " random, max |diff| " + Num(worst);
  }
  return out;
}

Outcome NonIdling() {
  Outcome out;
  double worst = 0.0;
  for (int i = 0; i < kIdlingInstances; ++i) {
    const Instance instance =
        testing::RandomSmallInstance(1002, i, {1, 2, 3, 7, 10}, 4, 2);
    const double idle = IdlingOracle(instance);
    const double brute = BruteForceOracle(instance);
    worst = std::max(worst, std::abs(idle - brute));
    out.Require(Near(idle, brute, kValueTol), "instance " + std::to_string(i) +
                                                  ": " + Num(idle) + " vs " +
                                                  Num(brute));
  }
  if (out.pass) {
    out.detail = std::to_string(kIdlingInstances) + " instances, max |diff| " +
                 Num(worst);
  }
  return out;
}

Outcome WithinTypeOrdering() {
  Outcome out;
  int swaps = 0;
  double tightest = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kListInstances; ++i) {
    const Instance instance =
        testing::RandomSmallInstance(1003, i, {1, 2, 5}, 6, 3);
    SeedStream rng(1004, i);
    std::vector<int> slots;
    for (int j = 0; j < instance.num_types(); ++j) {
      for (int k = 0; k < instance.jobs_of(j); ++k) slots.push_back(j);
    }
    std::shuffle(slots.begin(), slots.end(), rng);
    std::vector<int> next(instance.num_types(), 0);
    std::vector<JobRef> list;
    for (int j : slots) list.push_back({j, next[j]++});
    const double ordered =
        ExpectedCostExact(ListPolicy(instance, list), instance);
    for (std::size_t a = 0; a < list.size(); ++a) {
      auto b = std::find(list.begin(), list.end(),
                         JobRef{list[a].type, list[a].index + 1});
      if (b == list.end()) continue;
      std::vector<JobRef> swapped = list;
      std::swap(swapped[a], swapped[b - list.begin()]);
      const double cost =
          ExpectedCostExact(ListPolicy(instance, swapped), instance);
      ++swaps;
      tightest = std::min(tightest, cost - ordered);
      out.Require(cost >= ordered - kValueTol,
                  "instance " + std::to_string(i) + ": swap lowers cost " +
                      Num(ordered) + " -> " + Num(cost));
    }
  }
  if (out.pass) {
    out.detail = std::to_string(swaps) + " swaps, min increase " + Num(tightest);
  }
  return out;
}

Outcome Sandwich() {
  Outcome out;
  const Instance example = OneTypeExample();
  const TimeGrid example_grid(example, BuildGroups(example));
  const double exact_example = SolveExact(example).value;
  const double strat_example = SolveStratified(example, example_grid).value;
  out.Require(exact_example == 507.0 && strat_example == 572.0,
              "one-type example gave " + Num(exact_example) + " / " +
                  Num(strat_example));

  double worst = 0.0;
  const double bound2 = StratifiedRatioBound(2, Rational(1, 13));
  for (std::size_t i = 0; i < SandwichCases().size(); ++i) {
    const SandwichCase& c = SandwichCases()[i];
    const double exact = c.exact.value;
    const double strat = c.stratified.value;
    const double bound =
        StratifiedRatioBound(c.prepared.rounded.num_types(), Rational(1, 13));
    const double slack = kRelativeTol * std::max(1.0, exact);
    worst = std::max(worst, strat / exact);
    out.Require(exact <= strat + slack && strat <= bound * exact + slack,
                "instance " + std::to_string(i) + ": exact " + Num(exact) +
                    ", stratified " + Num(strat) + ", bound " + Num(bound));
  }
  if (out.pass) {
    out.detail = "507 vs 572; " + std::to_string(SandwichCases().size()) +
                 " instances, max ratio " + Num(worst) + " <= B(2,1/13) = " +
                 Num(bound2);
  }
  return out;
}

// Independent replay check against the literal grid enumeration.
std::optional<std::string> CheckAgainstOracle(const Schedule& schedule,
                                              const Instance& instance,
                                              const GroupStructure& groups,
                                              const testing::GridOracle& oracle) {
  std::map<int, std::vector<const ScheduledJob*>> by_machine;
  std::vector<int> next_index(instance.num_types(), 0);
  for (const ScheduledJob& entry : schedule.entries) {
    const int h = groups.group_of[entry.job.type];
    if (!oracle.Contains(h, entry.start)) {
      return "start " + entry.start.ToString() + " not allowed for type " +
             std::to_string(entry.job.type);
    }
    if (entry.job.index != next_index[entry.job.type]++) {
      return "type " + std::to_string(entry.job.type) + " out of q-order";
    }
    by_machine[entry.machine].push_back(&entry);
  }
  for (auto& [machine, entries] : by_machine) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const ScheduledJob* a, const ScheduledJob* b) {
                       return a->start < b->start;
                     });
    for (std::size_t k = 0; k + 1 < entries.size(); ++k) {
      const ScheduledJob& job = *entries[k];
      if (!job.is_long) continue;
      const int h = groups.group_of[job.job.type];
      const Rational earliest = std::max(oracle.p_circ()[h], job.completion);
      const auto release = oracle.Successor(h, earliest);
      if (!release) return "oracle limit too small";
      if (entries[k + 1]->start < *release) {
        return "start " + entries[k + 1]->start.ToString() +
               " inside the idle window ending at " + release->ToString();
      }
    }
  }
  return std::nullopt;
}

Rational OracleLimit(const TimeGrid& grid, const Rational& latest) {
  const Rational span = std::max(Rational(3) * grid.p_circ()[0], latest);
  return span + Rational(2) * grid.p_circ()[0];
}

Outcome Compliance() {
  Outcome out;
  long schedules = 0;
  for (std::size_t i = 0; i < SandwichCases().size(); ++i) {
    const SandwichCase& c = SandwichCases()[i];
    const Instance& instance = c.prepared.rounded;
    const TimeGrid grid(instance, c.prepared.groups);
    std::vector<std::pair<Realization, Schedule>> replays;
    Rational latest;
    ForEachRealization(instance, 20, [&](const Realization& r, double) {
      Schedule schedule = Replay(c.stratified.policy, instance, r);
      for (const ScheduledJob& entry : schedule.entries) {
        latest = std::max(latest, entry.released);
      }
      replays.emplace_back(r, std::move(schedule));
    });
    const testing::GridOracle oracle(instance, OracleLimit(grid, latest));
    for (const auto& [r, schedule] : replays) {
      ++schedules;
      const auto feasible = CheckFeasible(schedule, instance, r);
      out.Require(!feasible, "instance " + std::to_string(i) + ": " +
                                 feasible.value_or(""));
      const auto library = CheckStratified(schedule, instance, grid);
      out.Require(!library, "instance " + std::to_string(i) + ": " +
                                library.value_or(""));
      const auto literal =
          CheckAgainstOracle(schedule, instance, c.prepared.groups, oracle);
      out.Require(!literal, "instance " + std::to_string(i) + ": " +
                                literal.value_or(""));
    }
  }
  if (out.pass) {
    out.detail = std::to_string(schedules) + " replayed schedules";
  }
  return out;
}

Outcome ValueReplayConsistency() {
  Outcome out;
  double worst = 0.0;
  for (std::size_t i = 0; i < SandwichCases().size(); ++i) {
    const SandwichCase& c = SandwichCases()[i];
    const double exact = ExpectedCostExact(c.exact.policy, c.prepared.raw);
    const double strat =
        ExpectedCostExact(c.stratified.policy, c.prepared.rounded);
    worst = std::max({worst, std::abs(exact - c.exact.value),
                      std::abs(strat - c.stratified.value)});
    out.Require(Near(exact, c.exact.value, kValueTol),
                "instance " + std::to_string(i) + " exact: " + Num(exact) +
                    " vs " + Num(c.exact.value));
    out.Require(Near(strat, c.stratified.value, kValueTol),
                "instance " + std::to_string(i) + " stratified: " + Num(strat) +
                    " vs " + Num(c.stratified.value));
  }
  if (out.pass) out.detail = "max |diff| " + Num(worst);
  return out;
}

Outcome GridProperties() {
  Outcome out;
  long nesting_cases = 0;
  for (std::size_t i = 0; i < SandwichCases().size(); ++i) {
    const SandwichCase& c = SandwichCases()[i];
    const Instance& instance = c.prepared.rounded;
    const TimeGrid grid(instance, c.prepared.groups);
    const Rational horizon = Rational(3) * grid.p_circ()[0];
    const testing::GridOracle oracle(instance, OracleLimit(grid, horizon));
    const std::string where = "instance " + std::to_string(i) + ": ";
    for (int h = 0; h < grid.gamma(); ++h) {
      out.Require(oracle.Contains(h, Rational(0)), where + "0 missing");
      out.Require(oracle.Contains(h, oracle.p_circ()[h]) &&
                      grid.Contains(h, grid.p_circ()[h]),
                  where + "p° not a member");
    }
    SeedStream rng(7001, i);
    const Rational unit = grid.pitch(grid.gamma() - 1) / Rational(4);
    std::uniform_int_distribution<std::int64_t> pick(
        0, FloorDiv(horizon, unit).convert_to<std::int64_t>());
    std::uniform_int_distribution<std::int64_t> fraction(0, 3);
    for (int s = 0; s < kGridSamples; ++s) {
      // Three out of four samples land on the finest pitch.
      Rational t = Rational(pick(rng)) * unit;
      if (fraction(rng) == 0) t += unit * Rational(1, 7);
      for (int h = 0; h < grid.gamma(); ++h) {
        const bool member = oracle.Contains(h, t);
        out.Require(member == grid.Contains(h, t),
                    where + "membership differs at " + t.ToString());
        if (h > 0 && oracle.Contains(h - 1, t)) {
          out.Require(member, where + "chain broken at " + t.ToString());
        }
        if (h > 0 && member) {
          const auto above = oracle.After(h - 1, t);
          out.Require(above.has_value(), where + "oracle limit too small");
          if (above && *above < t + grid.largest(h)) {
            ++nesting_cases;
            out.Require(oracle.Contains(h - 1, t),
                        where + "nesting fails at " + t.ToString());
          }
        }
      }
    }
  }
  if (out.pass) {
    out.detail = std::to_string(out.checks) + " checks, " +
                 std::to_string(nesting_cases) + " nesting premises met";
  }
  return out;
}

Outcome DiagnosticsCeilings() {
  Outcome out;
  double tightest = 0.0;
  for (std::size_t i = 0; i < SandwichCases().size(); ++i) {
    const SandwichCase& c = SandwichCases()[i];
    const StratifiedDiagnostics& d = c.stratified.diagnostics;
    const double points = TimePointCeiling(c.prepared.rounded);
    const double profiles = ProfileCeiling(c.prepared.rounded, c.prepared.groups);
    tightest = std::max({tightest, d.relevant_time_points / points,
                         d.max_profiles_per_timepoint / profiles});
    out.Require(d.relevant_time_points <= points,
                "instance " + std::to_string(i) + ": " +
                    std::to_string(d.relevant_time_points) + " time points");
    out.Require(d.max_profiles_per_timepoint <= profiles,
                "instance " + std::to_string(i) + ": " +
                    std::to_string(d.max_profiles_per_timepoint) + " profiles");
  }
  if (out.pass) out.detail = "largest fraction of a ceiling " + Num(tightest);
  return out;
}

bool SameTableScaled(const PolicyTable& base, const PolicyTable& scaled,
                     const Rational& lambda) {
  if (base.size() != scaled.size()) return false;
  for (const auto& [state, decision] : base.decisions()) {
    std::vector<Rational> loads;
    for (const Rational& load : state.profile.loads()) loads.push_back(load * lambda);
    const auto it =
        scaled.decisions().find({LoadProfile(std::move(loads)), state.leftover});
    if (it == scaled.decisions().end()) return false;
    Decision expected = decision;
    expected.time = decision.time * lambda;
    if (!(it->second == expected)) return false;
  }
  return true;
}

Outcome ScaleInvariance() {
  Outcome out;
  for (int i = 0; i < kScaleInstances; ++i) {
    const Prepared base = Prepare(SandwichCases()[i].prepared.raw);
    const ExactSolution& exact = SandwichCases()[i].exact;
    const StratifiedSolution& strat = SandwichCases()[i].stratified;
    for (std::int64_t factor : {2, 7}) {
      const Rational lambda(factor);
      const Instance raw = ScaleSizes(base.raw, lambda);
      const Prepared scaled = Prepare(raw);
      const std::string where = "instance " + std::to_string(i) +
                                ", lambda " + std::to_string(factor) + ": ";
      out.Require(scaled.rounded.types.size() == base.rounded.types.size() &&
                      [&] {
                        for (int j = 0; j < base.rounded.num_types(); ++j) {
                          if (scaled.rounded.size(j) != base.rounded.size(j) * lambda)
                            return false;
                        }
                        return true;
                      }(),
                  where + "rounding does not commute with scaling");
      const ExactSolution exact_scaled = SolveExact(raw);
      const StratifiedSolution strat_scaled = SolveStratified(
          scaled.rounded, TimeGrid(scaled.rounded, scaled.groups));
      out.Require(Near(exact_scaled.value, factor * exact.value,
                       kRelativeTol * std::max(1.0, exact_scaled.value)),
                  where + "exact value " + Num(exact_scaled.value));
      out.Require(Near(strat_scaled.value, factor * strat.value,
                       kRelativeTol * std::max(1.0, strat_scaled.value)),
                  where + "stratified value " + Num(strat_scaled.value));
      out.Require(SameTableScaled(exact.policy, exact_scaled.policy, lambda),
                  where + "exact tables differ");
      out.Require(SameTableScaled(strat.policy, strat_scaled.policy, lambda),
                  where + "stratified tables differ");
    }
  }
  if (out.pass) {
    out.detail = std::to_string(kScaleInstances) + " instances x {2, 7}";
  }
  return out;
}

bool IsPowerOf(Rational value, std::int64_t c) {
  const Rational base(c);
  if (!value.IsInteger()) return false;
  while (value > Rational(1)) {
    if (!IsMultipleOf(value, base)) return false;
    value = value / base;
  }
  return value == Rational(1);
}

Outcome RoundingReductions() {
  Outcome out;
  ExperimentSpec spec;
  spec.count = kRoundingInstances;
  spec.num_types = 5;
  spec.max_jobs_per_type = 3;
  spec.max_total_jobs = 12;
  spec.scheme = SizeScheme::kGrouped;
  spec.seed = 10001;
  const Rational grid_growth(14, 13);
  const std::int64_t c = 169;
  for (int i = 0; i < kRoundingInstances; ++i) {
    const Instance raw = GenerateOne(spec, i);
    const std::string where = "instance " + std::to_string(i) + ": ";
    const GroupStructure groups = BuildGroups(raw);
    const DivisibilityRounding r = RoundForDivisibility(raw, groups);
    const Rational eps = raw.epsilon();
    const GroupStructure& g = r.groups;
    out.Require(g.gamma() == groups.gamma(), where + "group count changed");
    for (int h = 0; h < g.gamma(); ++h) {
      if (h + 1 < g.gamma()) {
        out.Require(IsMultipleOf(g.representative[h], g.representative[h + 1]),
                    where + "representatives do not divide");
      }
      for (int j : g.members[h]) {
        out.Require(IsMultipleOf(r.instance.size(j), eps * g.representative[h]),
                    where + "size not on its group pitch");
      }
    }
    for (int j = 0; j < raw.num_types(); ++j) {
      const Rational& before = raw.size(j);
      const Rational& after = r.instance.size(r.type_map[j]);
      out.Require(before <= after && after <= before * grid_growth,
                  where + "divisibility growth out of range for type " +
                      std::to_string(j));
      out.Require(g.group_of[r.type_map[j]] == groups.group_of[j],
                  where + "type changed group");
    }

    const PowerRounding p = RoundToPowersOfC(raw, c);
    for (int j = 0; j < p.instance.num_types(); ++j) {
      out.Require(IsPowerOf(p.instance.size(j), c) &&
                      p.instance.size(j) == Pow(Rational(c), p.exponents[j]),
                  where + "not a power of c");
    }
    for (int j = 0; j < raw.num_types(); ++j) {
      const Rational before = raw.size(j) * p.prescale;
      const Rational& after = p.instance.size(p.type_map[j]);
      out.Require(before <= after && after < before * Rational(c),
                  where + "power growth out of range");
    }

    const Rational scale = Rational::FromDouble(
        ExpectedCostExact(*MakeSeptPolicy(p.instance), p.instance));
    const SizeClasses classes = PartitionBySize(p.instance, scale);
    const Rational n(p.instance.num_jobs());
    std::vector<JobRef> seen;
    for (const JobRef& job : classes.small) {
      out.Require(p.instance.size(job.type) / scale < Rational(1) / (n * n),
                  where + "small job above threshold");
      seen.push_back(job);
    }
    for (const JobRef& job : classes.medium) {
      const Rational ratio = p.instance.size(job.type) / scale;
      out.Require(ratio >= Rational(1) / (n * n) && ratio < Pow(n, 8),
                  where + "medium job outside thresholds");
      seen.push_back(job);
    }
    for (const JobRef& job : classes.large) {
      out.Require(p.instance.size(job.type) / scale >= Pow(n, 8),
                  where + "large job below threshold");
      seen.push_back(job);
    }
    std::sort(seen.begin(), seen.end());
    out.Require(seen == p.instance.jobs(), where + "partition not exact");
  }
  if (out.pass) {
    out.detail = std::to_string(kRoundingInstances) + " instances, " +
                 std::to_string(out.checks) + " checks";
  }
  return out;
}

Outcome MonteCarlo() {
  Outcome out;
  ExperimentSpec spec;
  spec.count = kMonteCarloInstances;
  spec.num_types = 2;
  spec.max_total_jobs = 6;
  spec.seed = 11001;
  double worst = 0.0;
  for (int i = 0; i < kMonteCarloInstances; ++i) {
    const Instance instance = GenerateOne(spec, i);
    const ExactSolution solution = SolveExact(instance);
    const double enumerated = ExpectedCostExact(solution.policy, instance);
    const MonteCarloResult a =
        ExpectedCostMonteCarlo(solution.policy, instance, kMonteCarloTrials, 42);
    const MonteCarloResult b =
        ExpectedCostMonteCarlo(solution.policy, instance, kMonteCarloTrials, 42);
    const std::string where = "instance " + std::to_string(i) + ": ";
    const double deviation = std::abs(a.mean - enumerated);
    if (a.stderr_mean > 0) worst = std::max(worst, deviation / a.stderr_mean);
    out.Require(deviation <= kMonteCarloSigmas * a.stderr_mean,
                where + "mean " + Num(a.mean) + " vs " + Num(enumerated) +
                    " (stderr " + Num(a.stderr_mean) + ")");
    const auto dump = [](const MonteCarloResult& r) {
      return nlohmann::json{{"mean", r.mean},
                            {"stderr", r.stderr_mean},
                            {"trials", r.trials}}
          .dump();
    };
    out.Require(dump(a) == dump(b), where + "rerun differs");
  }
  if (out.pass) {
    out.detail = std::to_string(kMonteCarloInstances) + " x " +
                 std::to_string(kMonteCarloTrials) +
                 " trials, max deviation " + Num(worst) + " stderr";
  }
  return out;
}

}  // namespace
}  // namespace bernsched

int main() {
  using namespace bernsched;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle-equivalence", OracleEquivalence},
      {"non-idling", NonIdling},
      {"within-type-ordering", WithinTypeOrdering},
      {"ptas-sandwich", Sandwich},
      {"stratified-compliance", Compliance},
      {"value-replay-consistency", ValueReplayConsistency},
      {"grid-properties", GridProperties},
      {"diagnostics-ceilings", DiagnosticsCeilings},
      {"scale-invariance", ScaleInvariance},
      {"rounding-reductions", RoundingReductions},
      {"monte-carlo", MonteCarlo},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[k].second();
    } catch (const std::exception& error) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + error.what();
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    failures += !outcome.pass;
    std::printf("[%s] %zu %s: %s (%.1fs)\n", outcome.pass ? "PASS" : "FAIL",
                k + 1, criteria[k].first.c_str(), outcome.detail.c_str(),
                seconds);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
