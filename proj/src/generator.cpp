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

#include "multibot/generator.hpp"

#include <algorithm>
#include <limits>

#include "multibot/errors.hpp"
#include "multibot/io.hpp"

namespace multibot::gen {

Count Rng::uniform(Count lo, Count hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return lo + static_cast<Count>(engine_());
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % span + 1) % span;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw > limit);
  return lo + static_cast<Count>(draw % span);
}

InstanceData generate(const Params& params) {
  if (params.num_types < 1 || params.max_config < 1 || params.num_periods < 1) {
    throw InvalidArgumentError("generator dimensions must be positive");
  }
  if (params.cmax < 1 || params.dmax < 1) {
    throw InvalidArgumentError("generator cmax and dmax must be positive");
  }
  Rng rng(params.seed);
  InstanceData data;
  data.num_types = params.num_types;
  data.max_config = params.max_config;
  data.num_periods = params.num_periods;
  for (int k = 0; k < params.num_types; ++k) {
    std::vector<Count> row(params.max_config);
    for (auto& c : row) c = rng.uniform(0, params.cmax);
    if (std::all_of(row.begin(), row.end(), [](Count c) { return c == 0; })) {
      const auto p = rng.uniform(1, params.max_config);
      row[p - 1] = rng.uniform(1, params.cmax);
    }
    data.capacities.push_back(std::move(row));
    data.demands.push_back(rng.uniform(1, params.dmax));
  }
  return data;
}

std::string generate_text(const Params& params) {
  const InstanceData data = generate(params);
  validate(data);
  const std::string meta = "{\"cmax\": " + std::to_string(params.cmax) +
                           ", \"dmax\": " + std::to_string(params.dmax) +
                           ", \"seed\": " + std::to_string(params.seed) + "}";
  return io::serialize_instance(data, meta);
}

}  // namespace multibot::gen
