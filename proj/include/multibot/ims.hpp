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

// Identical-machines scheduling (P||Cmax): the packing-to-items transform,
// longest-processing-time-first, and conversion back into a schedule.

#include <vector>

#include "multibot/core.hpp"

namespace multibot::ims {

// An item stands for `multiplicity` many p-resources processing job `type`.
struct Item {
  Count size = 0;  // config * multiplicity
  int config = 0;
  int type = 0;
  Count multiplicity = 0;

  friend bool operator==(const Item&, const Item&) = default;
};

struct ImsInstance {
  std::vector<Item> items;
  int num_boxes = 1;
};

struct ImsAssignment {
  std::vector<int> box_of;  // item index -> box index
  std::vector<Count> loads;
  Count makespan = 0;
};

// Turns a packing into items for `num_periods` boxes. Small packings give one
// item per resource; when volume > 3 * max_config * num_periods, resources of
// the same (p, k) are grouped in blocks of floor(volume / (3 p T)).
ImsInstance transform_packing(const Packing& packing, int num_periods, int max_config);

// Convenience for standalone use: unit-multiplicity items of the given sizes.
ImsInstance from_sizes(const std::vector<Count>& sizes, int num_boxes);

// Longest-processing-time-first. Items are taken by non-increasing size (ties
// by lower index) and placed on the least-loaded box (ties by lower index).
ImsAssignment lpt_first(const ImsInstance& ims);

// Loads and makespan recomputed from box_of.
ImsAssignment make_assignment(const ImsInstance& ims, std::vector<int> box_of);

Schedule assignment_to_schedule(const ImsInstance& ims, const ImsAssignment& assignment);

}  // namespace multibot::ims
