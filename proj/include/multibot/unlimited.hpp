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

// Minimum-volume packing meeting every demand, with no limit on the
// configuration size or the scale.
//
// Built type by type. The start packing uses only the optimal configuration
// p0(k) of every type. Step j re-solves type j exactly: it tries every volume
// W <= W(P) spent on non-optimal configurations (best production from a DP),
// then tops the demand up with p0(j) resources.

#include <vector>

#include "multibot/core.hpp"

namespace multibot::unlimited {

struct InductionState {
  int step = 0;  // number of types already re-solved
  Packing packing;
  std::vector<Count> nonopt_volume;  // per type, volume on p != p0(k)
};

// W(P) = P * P * (P - 1) / 2, an upper bound on the per-type volume spent on
// non-optimal configurations by some optimal packing.
Count nonopt_budget(int max_config);

// ceil(d_k / c[k][p0(k)]) optimal-configuration resources for every type.
Packing pi_zero(const Instance& instance);

InductionState initial_state(const Instance& instance);

// Re-solves type `state.step` and advances the step.
InductionState improve_type(const Instance& instance, const InductionState& state);

Packing solve_unlimited(const Instance& instance);

}  // namespace multibot::unlimited
