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

// Exact optimum height for desk-scale instances.
//
// Feasibility of a height H is decided by a dynamic program over periods on
// the vector of jobs produced so far (clamped at the demands). The per-period
// choices come from enumerating packings in the normal form where every
// non-optimal configuration p != p0(k) is used at most p0(k) times per period;
// some optimal schedule always has that form.

#include <cstdint>
#include <optional>

#include "multibot/core.hpp"

namespace multibot::oracle {

struct Options {
  // Ceiling on the demand-vector state space and on each enumeration.
  std::uint64_t state_budget = 10'000'000;
};

// True iff some schedule meets every demand with every period height <= H.
// Throws TooLargeError past the budget.
bool feasible_with_height(const Instance& instance, Count height, const Options& options = {});

// A schedule with every period height <= H meeting every demand, or nullopt.
std::optional<Schedule> witness_schedule(const Instance& instance, Count height,
                                         const Options& options = {});

// ceil(sum_k ceil(d_k * p0 / c[k][p0]) / T), and at least 1. Deliberately
// cruder than the minimum packing volume so the oracle does not depend on
// the solvers it is used to check.
Count lower_bound(const Instance& instance);

// Smallest feasible height by binary search on [lower_bound, upper_bound].
// Throws InvalidArgumentError when `upper_bound` turns out infeasible.
Count exact_solve(const Instance& instance, Count upper_bound, const Options& options = {});

// Same, with the upper bound taken from the approximation.
Count exact_solve(const Instance& instance, const Options& options = {});

}  // namespace multibot::oracle
