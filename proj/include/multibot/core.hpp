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

// Problem data for reconfigurable-resource scheduling and the measures
// defined on packings and schedules.
//
// Conventions used throughout the library:
//  * job types are indexed 0..K-1;
//  * configurations are the literal team sizes 1..P (a p-resource is a team
//    of p elementary resources);
//  * periods are indexed 0..T-1.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace multibot {

using Count = std::int64_t;

// Raw, unvalidated instance data as read from a file or built by hand.
struct InstanceData {
  int num_types = 0;
  int max_config = 0;
  int num_periods = 0;
  // One row per job type; entry p-1 of row k is the number of type-k jobs a
  // p-resource processes in one period.
  std::vector<std::vector<Count>> capacities;
  std::vector<Count> demands;

  friend bool operator==(const InstanceData&, const InstanceData&) = default;
};

// Throws BadDimensionError, InfeasibleTypeError or InvalidArgumentError.
void validate(const InstanceData& data);

// Drops job types whose demand is zero. Negative demands are left in place so
// that validation reports them.
InstanceData strip_zero_demands(InstanceData data);

// A validated instance. Immutable once constructed.
class Instance {
 public:
  explicit Instance(InstanceData data);

  int num_types() const noexcept { return data_.num_types; }
  int max_config() const noexcept { return data_.max_config; }
  int num_periods() const noexcept { return data_.num_periods; }

  Count capacity(int type, int config) const {
    return data_.capacities[type][config - 1];
  }
  std::span<const Count> capacity_row(int type) const { return data_.capacities[type]; }
  Count demand(int type) const { return data_.demands[type]; }

  const InstanceData& data() const noexcept { return data_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  InstanceData data_;
};

// A half-integer stored as twice its value so arithmetic stays exact.
struct HalfInt {
  Count doubled = 0;

  static constexpr HalfInt from_integer(Count v) { return HalfInt{2 * v}; }
  constexpr bool is_integer() const { return doubled % 2 == 0; }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
};

std::string to_string(HalfInt h);

enum class ScaleClass { kSmall, kMedium, kBig };

// small: 3p <= lambda, medium: lambda < 3p <= 2 lambda, big: 3p > 2 lambda.
constexpr ScaleClass classify(Count config, Count lambda) {
  if (3 * config > 2 * lambda) return ScaleClass::kBig;
  if (3 * config > lambda) return ScaleClass::kMedium;
  return ScaleClass::kSmall;
}

// Time-free count of p-resources per job type. Only non-zero entries are
// stored; keys are (config, type).
class Packing {
 public:
  using Key = std::pair<int, int>;

  Count count(int config, int type) const;
  void set(int config, int type, Count n);
  void add(int config, int type, Count n);

  const std::map<Key, Count>& entries() const noexcept { return counts_; }
  bool empty() const noexcept { return counts_.empty(); }

  friend bool operator==(const Packing&, const Packing&) = default;

 private:
  std::map<Key, Count> counts_;
};

// Total resources involved: sum of p * x[p][k].
Count volume(const Packing& packing);

// Largest configuration in use, 0 for the empty packing.
int maximum(const Packing& packing);

// Count of big configurations plus half the count of medium ones.
HalfInt scale(const Packing& packing, Count lambda);

// Jobs of `type` processed: sum over p of c[k][p] * x[p][k].
Count production(const Instance& instance, const Packing& packing, int type);

bool satisfies_demands(const Instance& instance, const Packing& packing);

// One packing per period. Heights are always recomputed from the packings.
class Schedule {
 public:
  explicit Schedule(int num_periods) : periods_(num_periods) {}
  explicit Schedule(std::vector<Packing> periods) : periods_(std::move(periods)) {}

  int num_periods() const noexcept { return static_cast<int>(periods_.size()); }
  const Packing& period(int t) const { return periods_[t]; }
  Packing& period(int t) { return periods_[t]; }
  const std::vector<Packing>& periods() const noexcept { return periods_; }

  std::vector<Count> heights() const;
  Count height() const;

  // Sum of the per-period packings.
  Packing associated_packing() const;

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  std::vector<Packing> periods_;
};

bool satisfies_demands(const Instance& instance, const Schedule& schedule);

// The configuration with the best capacity-per-resource ratio for `type`,
// ties going to the smallest configuration.
int optimal_configuration(const Instance& instance, int type);

// Rewrites the schedule so that for every period, type k and p != p0(k) at
// most p0(k) p-resources are used. Per-period heights are unchanged and no
// per-period production decreases.
Schedule normalize_schedule(const Instance& instance, const Schedule& schedule);

}  // namespace multibot
