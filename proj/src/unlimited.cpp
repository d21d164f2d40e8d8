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

#include "multibot/unlimited.hpp"

#include "multibot/checked.hpp"
#include "multibot/errors.hpp"
#include "multibot/progdyn.hpp"

namespace multibot::unlimited {

Count nonopt_budget(int max_config) {
  const Count p = max_config;
  return p * p * (p - 1) / 2;
}

Packing pi_zero(const Instance& instance) {
  Packing out;
  for (int k = 0; k < instance.num_types(); ++k) {
    const int p0 = optimal_configuration(instance, k);
    out.set(p0, k, ceil_div(instance.demand(k), instance.capacity(k, p0)));
  }
  return out;
}

InductionState initial_state(const Instance& instance) {
  InductionState s;
  s.packing = pi_zero(instance);
  s.nonopt_volume.assign(instance.num_types(), 0);
  return s;
}

InductionState improve_type(const Instance& instance, const InductionState& state) {
  const int k = state.step;
  if (k < 0 || k >= instance.num_types()) {
    throw InvalidArgumentError("induction already covers every job type");
  }
  const int p0 = optimal_configuration(instance, k);
  const Count c0 = instance.capacity(k, p0);
  const Count demand = instance.demand(k);

  // Single type, p0 disabled, no scale constraint.
  progdyn::DpProblem aux;
  aux.capacities = {instance.data().capacities[k]};
  aux.capacities[0][p0 - 1] = 0;
  aux.demands = {demand};
  aux.lambda = progdyn::Lambda::infinity();
  aux.volume_cap = nonopt_budget(instance.max_config());
  aux.tau2_cap = 0;
  const auto tables = progdyn::build_tables(aux);
  const int top = tables.top_config();

  Count best_w = 0;
  Count best_total = -1;
  Count best_fill = 0;
  for (Count w = 0; w <= aux.volume_cap; ++w) {
    const Count made = tables.table(top, 0, w, 0);
    const Count missing = made >= demand ? 0 : demand - made;
    const Count fill = ceil_div(missing, c0);
    const Count total = checked_add(w, checked_mul(p0, fill));
    if (best_total < 0 || total < best_total) {
      best_total = total;
      best_w = w;
      best_fill = fill;
    }
  }

  InductionState next;
  next.step = k + 1;
  next.nonopt_volume = state.nonopt_volume;
  for (const auto& [key, n] : state.packing.entries()) {
    if (key.second != k) next.packing.set(key.first, key.second, n);
  }
  const auto part = progdyn::recover(tables, top, 0, best_w, 0);
  if (!part) throw Error("auxiliary DP has no packing for a reachable volume");
  for (const auto& [key, n] : part->entries()) next.packing.add(key.first, k, n);
  next.nonopt_volume[k] = volume(*part);
  if (best_fill > 0) next.packing.add(p0, k, best_fill);
  return next;
}

Packing solve_unlimited(const Instance& instance) {
  InductionState s = initial_state(instance);
  while (s.step < instance.num_types()) s = improve_type(instance, s);
  return s.packing;
}

}  // namespace multibot::unlimited
