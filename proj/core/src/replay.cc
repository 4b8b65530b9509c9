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

#include "bernsched/replay.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace bernsched {

double Realization::Probability(const Instance& instance) const {
  double probability = 1.0;
  for (const JobRef& job : instance.jobs()) {
    const double q = instance.probability(job);
    probability *= (*this)(job) ? q : 1.0 - q;
  }
  return probability;
}

Realization Realization::AllLong(const Instance& instance) {
  Realization realization;
  for (int j = 0; j < instance.num_types(); ++j) {
    realization.is_long.emplace_back(instance.jobs_of(j), true);
  }
  return realization;
}

Realization Realization::Sample(const Instance& instance, SeedStream& stream) {
  Realization realization = AllLong(instance);
  for (const JobRef& job : instance.jobs()) {
    realization.is_long[job.type][job.index] =
        stream.Bernoulli(instance.probability(job));
  }
  return realization;
}

Rational Schedule::TotalCost() const {
  Rational total;
  for (const ScheduledJob& entry : entries) total += entry.completion;
  return total;
}

Schedule Replay(const Policy& policy, const Instance& instance,
                const Realization& realization) {
  const int m = instance.machines;
  std::vector<Rational> available(m, Rational(0));
  std::vector<bool> retired(m, false);
  std::vector<std::vector<bool>> started;
  for (int j = 0; j < instance.num_types(); ++j) {
    started.emplace_back(instance.jobs_of(j), false);
  }
  Leftover leftover = instance.counts();
  std::unique_ptr<PolicyRun> run = policy.NewRun();
  Schedule schedule;
  int remaining = instance.num_jobs();
  // Bounds the number of consecutive non-start decisions.
  int stalled = 0;

  while (remaining > 0) {
    int machine = -1;
    for (int i = 0; i < m; ++i) {
      if (!retired[i] && (machine < 0 || available[i] < available[machine])) {
        machine = i;
      }
    }
    if (machine < 0) {
      throw std::logic_error(policy.name() +
                             ": all machines retired with jobs left");
    }
    ReplayView view{&instance, &available, &retired, &started, &leftover,
                    machine,   available[machine]};
    const Decision decision = run->Decide(view);
    switch (decision.kind) {
      case DecisionKind::kStart: {
        const int j = decision.type;
        if (j < 0 || j >= instance.num_types() || leftover[j] == 0) {
          throw std::logic_error(policy.name() + ": start of exhausted type " +
                                 std::to_string(j));
        }
        int index = decision.index;
        if (index < 0) {
          index = 0;
          while (started[j][index]) ++index;
        }
        if (index >= instance.jobs_of(j) || started[j][index]) {
          throw std::logic_error(policy.name() + ": job already started");
        }
        const JobRef job{j, index};
        const bool is_long = realization(job);
        ScheduledJob entry{job, machine, view.now, view.now, is_long,
                           view.now};
        if (is_long) {
          entry.completion = view.now + instance.size(j);
          if (decision.time < entry.completion) {
            throw std::logic_error(policy.name() +
                                   ": machine released before completion");
          }
          entry.released = decision.time;
          available[machine] = decision.time;
        }
        started[j][index] = true;
        --leftover[j];
        --remaining;
        stalled = 0;
        schedule.entries.push_back(std::move(entry));
        run->Observe(job, is_long);
        break;
      }
      case DecisionKind::kAdvance:
        if (!(decision.time > view.now)) {
          throw std::logic_error(policy.name() + ": advance does not move");
        }
        for (int i = 0; i < m; ++i) {
          if (!retired[i] && available[i] < decision.time) {
            available[i] = decision.time;
          }
        }
        break;
      case DecisionKind::kRetire:
        retired[machine] = true;
        break;
    }
    if (decision.kind != DecisionKind::kStart && ++stalled > 4 * m + 1024) {
      throw std::logic_error(policy.name() + ": no progress");
    }
  }
  return schedule;
}

std::optional<std::string> CheckFeasible(const Schedule& schedule,
                                         const Instance& instance,
                                         const Realization& realization) {
  std::vector<std::vector<int>> seen;
  for (int j = 0; j < instance.num_types(); ++j) {
    seen.emplace_back(instance.jobs_of(j), 0);
  }
  std::map<int, std::vector<std::pair<Rational, Rational>>> busy;
  for (const ScheduledJob& entry : schedule.entries) {
    const JobRef& job = entry.job;
    std::ostringstream name;
    name << "job (" << job.type << "," << job.index << ")";
    if (job.type < 0 || job.type >= instance.num_types() || job.index < 0 ||
        job.index >= instance.jobs_of(job.type)) {
      return name.str() + " does not exist";
    }
    if (++seen[job.type][job.index] > 1) return name.str() + " started twice";
    if (entry.machine < 0 || entry.machine >= instance.machines) {
      return name.str() + " on a nonexistent machine";
    }
    const Rational duration =
        realization(job) ? instance.size(job.type) : Rational(0);
    if (entry.completion != entry.start + duration) {
      return name.str() + " has C != S + X";
    }
    if (duration > Rational(0)) {
      busy[entry.machine].emplace_back(entry.start, entry.completion);
    }
  }
  for (int j = 0; j < instance.num_types(); ++j) {
    for (int k = 0; k < instance.jobs_of(j); ++k) {
      if (seen[j][k] == 0) {
        return "job (" + std::to_string(j) + "," + std::to_string(k) +
               ") never started";
      }
    }
  }
  for (auto& [machine, intervals] : busy) {
    std::sort(intervals.begin(), intervals.end());
    for (std::size_t i = 1; i < intervals.size(); ++i) {
      if (intervals[i].first < intervals[i - 1].second) {
        return "overlapping jobs on machine " + std::to_string(machine);
      }
    }
  }
  return std::nullopt;
}

void ForEachRealization(
    const Instance& instance, int max_random,
    const std::function<void(const Realization&, double)>& visit) {
  std::vector<JobRef> random_jobs;
  for (const JobRef& job : instance.jobs()) {
    if (instance.probability(job) < 1.0) random_jobs.push_back(job);
  }
  if (static_cast<int>(random_jobs.size()) > max_random) {
    throw std::invalid_argument(
        "enumeration needs at most " + std::to_string(max_random) +
        " random jobs, instance has " + std::to_string(random_jobs.size()));
  }
  Realization realization = Realization::AllLong(instance);
  const std::uint64_t count = std::uint64_t{1} << random_jobs.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    double probability = 1.0;
    for (std::size_t b = 0; b < random_jobs.size(); ++b) {
      const JobRef& job = random_jobs[b];
      const bool is_long = (mask >> b) & 1u;
      const double q = instance.probability(job);
      realization.is_long[job.type][job.index] = is_long;
      probability *= is_long ? q : 1.0 - q;
    }
    visit(realization, probability);
  }
}

double ExpectedCostExact(const Policy& policy, const Instance& instance,
                         int max_random) {
  double total = 0.0;
  ForEachRealization(instance, max_random,
                     [&](const Realization& realization, double probability) {
                       const Schedule schedule =
                           Replay(policy, instance, realization);
                       total += probability * schedule.TotalCost().ToDouble();
                     });
  return total;
}

MonteCarloResult ExpectedCostMonteCarlo(const Policy& policy,
                                        const Instance& instance, int trials,
                                        std::uint64_t seed, int threads) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  if (threads <= 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = std::min(threads, trials);
  std::vector<double> costs(trials);
  auto work = [&](int first, int last) {
    for (int i = first; i < last; ++i) {
      SeedStream stream(seed, static_cast<std::uint64_t>(i));
      const Realization realization = Realization::Sample(instance, stream);
      costs[i] = Replay(policy, instance, realization).TotalCost().ToDouble();
    }
  };
  if (threads == 1) {
    work(0, trials);
  } else {
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(threads);
    for (int w = 0; w < threads; ++w) {
      const int first = static_cast<int>(std::int64_t{trials} * w / threads);
      const int last =
          static_cast<int>(std::int64_t{trials} * (w + 1) / threads);
      workers.emplace_back([&, w, first, last] {
        try {
          work(first, last);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (std::thread& worker : workers) worker.join();
    for (const std::exception_ptr& error : errors) {
      if (error) std::rethrow_exception(error);
    }
  }
  MonteCarloResult result;
  result.trials = trials;
  double sum = 0.0;
  for (double cost : costs) sum += cost;
  result.mean = sum / trials;
  if (trials > 1) {
    double squares = 0.0;
    for (double cost : costs) squares += (cost - result.mean) * (cost - result.mean);
    result.stderr_mean = std::sqrt(squares / (trials - 1) / trials);
  }
  return result;
}

}  // namespace bernsched
