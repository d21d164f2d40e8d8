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

#pragma once

// 4/3-approximation for reconfigurable-resource scheduling.
//
//   1. Build candidate packings: the minimum-volume one-period packing for
//      every lambda in 1..3P-1 (when it exists) and the unconstrained
//      minimum-volume packing (lambda = infinity).
//   2. Turn each candidate into an identical-machines instance with T boxes.
//   3. Schedule it with LPT-first and keep the lowest resulting height.

#include <cstdint>
#include <optional>
#include <vector>

#include "multibot/core.hpp"
#include "multibot/progdyn.hpp"

namespace multibot::approx {

using progdyn::Lambda;

struct Options {
  int jobs = 1;  // worker threads for the per-lambda DP solves
};

struct CollectionEntry {
  Lambda lambda;
  Packing packing;
};

struct Collection {
  std::vector<CollectionEntry> entries;  // ascending lambda, infinity last
};

Collection build_collection(const Instance& instance, const Options& options = {});

// Steps 2 and 3 for one packing.
Schedule schedule_packing(const Packing& packing, int num_periods, int max_config);

struct LambdaOutcome {
  Lambda lambda;
  std::optional<Count> volume;  // empty when the one-period problem says NO
  std::optional<Count> height;
  std::optional<Schedule> schedule;
};

struct StageTimings {
  std::int64_t collection_us = 0;
  std::int64_t scheduling_us = 0;
  std::int64_t total_us = 0;
};

struct SolveReport {
  Schedule best{0};
  Lambda best_lambda = Lambda::infinity();
  std::vector<LambdaOutcome> per_lambda;
  StageTimings timings;
};

// Best schedule over the whole collection; ties go to the smaller lambda.
SolveReport bot_approx(const Instance& instance, const Options& options = {});

}  // namespace multibot::approx
