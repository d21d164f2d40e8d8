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

#include "multibot/ims.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <tuple>

#include "multibot/checked.hpp"
#include "multibot/errors.hpp"

namespace multibot::ims {

ImsInstance transform_packing(const Packing& packing, int num_periods, int max_config) {
  if (num_periods < 1) throw InvalidArgumentError("number of boxes must be positive");
  ImsInstance out;
  out.num_boxes = num_periods;
  const Count vol = volume(packing);
  const Count threshold = checked_mul(checked_mul(3, max_config), num_periods);

  for (const auto& [key, x] : packing.entries()) {
    const auto [p, k] = key;
    if (vol <= threshold) {
      for (Count i = 0; i < x; ++i) out.items.push_back({p, p, k, 1});
      continue;
    }
    const Count alpha = vol / (Count{3} * p * num_periods);
    const Count blocks = x / alpha;
    const Count rest = x - blocks * alpha;
    for (Count i = 0; i < blocks; ++i) out.items.push_back({p * alpha, p, k, alpha});
    if (rest > 0) out.items.push_back({p * rest, p, k, rest});
  }
  return out;
}

ImsInstance from_sizes(const std::vector<Count>& sizes, int num_boxes) {
  ImsInstance out;
  out.num_boxes = num_boxes;
  for (Count s : sizes) out.items.push_back({s, static_cast<int>(s), 0, 1});
  return out;
}

ImsAssignment make_assignment(const ImsInstance& ims, std::vector<int> box_of) {
  ImsAssignment a;
  a.box_of = std::move(box_of);
  a.loads.assign(ims.num_boxes, 0);
  for (std::size_t i = 0; i < ims.items.size(); ++i) {
    auto& load = a.loads[a.box_of[i]];
    load = checked_add(load, ims.items[i].size);
  }
  a.makespan = a.loads.empty() ? 0 : *std::max_element(a.loads.begin(), a.loads.end());
  return a;
}

ImsAssignment lpt_first(const ImsInstance& ims) {
  if (ims.num_boxes < 1) throw InvalidArgumentError("number of boxes must be positive");
  const auto n = ims.items.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ims.items[a].size > ims.items[b].size;
  });

  using Slot = std::pair<Count, int>;  // (load, box)
  std::priority_queue<Slot, std::vector<Slot>, std::greater<>> boxes;
  for (int b = 0; b < ims.num_boxes; ++b) boxes.emplace(0, b);

  std::vector<int> box_of(n, 0);
  for (auto i : order) {
    auto [load, b] = boxes.top();
    boxes.pop();
    box_of[i] = b;
    boxes.emplace(checked_add(load, ims.items[i].size), b);
  }
  return make_assignment(ims, std::move(box_of));
}

Schedule assignment_to_schedule(const ImsInstance& ims, const ImsAssignment& assignment) {
  Schedule schedule(ims.num_boxes);
  for (std::size_t i = 0; i < ims.items.size(); ++i) {
    const Item& item = ims.items[i];
    schedule.period(assignment.box_of[i]).add(item.config, item.type, item.multiplicity);
  }
  return schedule;
}

}  // namespace multibot::ims
