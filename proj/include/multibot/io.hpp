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

// Instance files and solver reports.
//
// Instance files are JSON objects with the keys
//   version     format version, currently 1
//   K, P, T     job types, largest configuration, periods
//   capacities  K rows of P non-negative integers; row k, entry p-1 is the
//               number of type-k jobs one p-resource processes per period
//   demands     K non-negative integers (zero-demand types are dropped)
//   generator   optional object recording how `gen` produced the file
// Canonical output sorts the keys and always uses the same layout, so
// serialize(parse(serialize(x))) == serialize(x).

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multibot/approx.hpp"
#include "multibot/core.hpp"

namespace multibot::io {

inline constexpr int kFormatVersion = 1;

// Throws ParseError for malformed text and the core validation errors for
// well-formed but invalid instances.
Instance parse_instance_text(std::string_view text);
Instance parse_instance(const std::filesystem::path& path);

// Canonical text. `generator` is an optional, already-canonical JSON object
// body to embed under the "generator" key.
std::string serialize_instance(const InstanceData& data,
                               const std::optional<std::string>& generator = std::nullopt);
std::string serialize_instance(const Instance& instance);

// FNV-1a 64 of the canonical serialization, as 16 hex digits.
std::string digest(const Instance& instance);

struct LambdaLine {
  std::string lambda;
  bool feasible = false;
  std::optional<Count> volume;
  std::optional<Count> height;
};

struct Report {
  std::string instance_digest;
  std::vector<LambdaLine> per_lambda;
  std::optional<Count> best_height;
  std::optional<std::string> best_lambda;
  std::optional<Schedule> best_schedule;
  std::optional<Count> oracle_height;
  std::vector<std::pair<std::string, std::int64_t>> timings_us;

  // 3H <= 4H*; only meaningful when both heights are present.
  bool ratio_ok() const { return 3 * *best_height <= 4 * *oracle_height; }
};

Report make_report(const Instance& instance, const approx::SolveReport& solve);

std::string to_json(const Report& report);

}  // namespace multibot::io
