// Copyright 2026 The Multibot Authors
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

#include "multibot/approx.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "multibot/ims.hpp"
#include "multibot/unlimited.hpp"

namespace multibot::approx {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t micros_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

// Solves every lambda in 1..3P-1 plus infinity. Slot i holds lambda i+1, the
// last slot holds infinity.
std::vector<std::optional<Packing>> solve_all(const Instance& instance, int jobs) {
  const int finite = 3 * instance.max_config() - 1;
  const int slots = finite + 1;
  std::vector<std::optional<Packing>> out(slots);
  std::vector<std::exception_ptr> errors(slots);

  auto solve_slot = [&](int i) {
    try {
      if (i < finite) {
        out[i] = progdyn::solve_one_period(instance, i + 1,
                                           HalfInt::from_integer(instance.num_periods()));
      } else {
        out[i] = unlimited::solve_unlimited(instance);
      }
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

  if (jobs <= 1) {
    for (int i = 0; i < slots; ++i) solve_slot(i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs && w < slots; ++w) {
      workers.emplace_back([&] {
        for (int i = next++; i < slots; i = next++) solve_slot(i);
      });
    }
    for (auto& w : workers) w.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

Lambda lambda_of_slot(int i, int slots) {
  return i + 1 < slots ? Lambda::finite(i + 1) : Lambda::infinity();
}

}  // namespace

Collection build_collection(const Instance& instance, const Options& options) {
  auto solved = solve_all(instance, options.jobs);
  Collection c;
  const int slots = static_cast<int>(solved.size());
  for (int i = 0; i < slots; ++i) {
    if (solved[i]) c.entries.push_back({lambda_of_slot(i, slots), std::move(*solved[i])});
  }
  return c;
}

Schedule schedule_packing(const Packing& packing, int num_periods, int max_config) {
  const auto ims_instance = ims::transform_packing(packing, num_periods, max_config);
  const auto assignment = ims::lpt_first(ims_instance);
  return ims::assignment_to_schedule(ims_instance, assignment);
}

SolveReport bot_approx(const Instance& instance, const Options& options) {
  const auto start = Clock::now();
  auto solved = solve_all(instance, options.jobs);
  SolveReport report;
  report.timings.collection_us = micros_since(start);

  const auto sched_start = Clock::now();
  const int slots = static_cast<int>(solved.size());
  std::optional<Count> best_height;
  for (int i = 0; i < slots; ++i) {
    LambdaOutcome outcome{lambda_of_slot(i, slots), std::nullopt, std::nullopt, std::nullopt};
    if (solved[i]) {
      Schedule s = schedule_packing(*solved[i], instance.num_periods(), instance.max_config());
      outcome.volume = volume(*solved[i]);
      outcome.height = s.height();
      // Strict comparison in ascending lambda order keeps the smallest lambda on ties.
      if (!best_height || *outcome.height < *best_height) {
        best_height = outcome.height;
        report.best = s;
        report.best_lambda = outcome.lambda;
      }
      outcome.schedule = std::move(s);
    }
    report.per_lambda.push_back(std::move(outcome));
  }
  report.timings.scheduling_us = micros_since(sched_start);
  report.timings.total_us = micros_since(start);
  return report;
}

}  // namespace multibot::approx
