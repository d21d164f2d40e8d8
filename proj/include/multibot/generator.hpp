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

#include <cstdint>
#include <random>
#include <string>

#include "multibot/core.hpp"

namespace multibot::gen {

struct Params {
  std::uint64_t seed = 0;
  int num_types = 1;
  int max_config = 1;
  int num_periods = 1;
  Count cmax = 1;
  Count dmax = 1;
};

// Uniform integers from std::mt19937_64, whose output sequence is fixed by
// the standard. Bounded draws use rejection sampling so results do not depend
// on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi].
  Count uniform(Count lo, Count hi);

 private:
  std::mt19937_64 engine_;
};

// For each type k: c[k][1..P] uniform in 0..cmax in order of p; when the row
// is all zero, one configuration drawn uniformly in 1..P gets a capacity
// uniform in 1..cmax. Then d[k] is uniform in 1..dmax.
InstanceData generate(const Params& params);

// Canonical instance text with the parameters recorded under "generator".
std::string generate_text(const Params& params);

}  // namespace multibot::gen
