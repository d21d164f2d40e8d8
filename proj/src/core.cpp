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

#include "multibot/core.hpp"

#include <algorithm>

#include "multibot/checked.hpp"
#include "multibot/errors.hpp"

namespace multibot {

void validate(const InstanceData& data) {
  if (data.num_types < 1 || data.max_config < 1 || data.num_periods < 1) {
    throw BadDimensionError("K, P and T must all be at least 1");
  }
  if (static_cast<int>(data.capacities.size()) != data.num_types) {
    throw BadDimensionError("expected " + std::to_string(data.num_types) +
                            " capacity rows, got " + std::to_string(data.capacities.size()));
  }
  if (static_cast<int>(data.demands.size()) != data.num_types) {
    throw BadDimensionError("expected " + std::to_string(data.num_types) + " demands, got " +
                            std::to_string(data.demands.size()));
  }
  for (int k = 0; k < data.num_types; ++k) {
    const auto& row = data.capacities[k];
    if (static_cast<int>(row.size()) != data.max_config) {
      throw BadDimensionError("capacity row " + std::to_string(k) + " has " +
                              std::to_string(row.size()) + " entries, expected " +
                              std::to_string(data.max_config));
    }
    if (std::any_of(row.begin(), row.end(), [](Count c) { return c < 0; })) {
      throw InvalidArgumentError("capacity row " + std::to_string(k) + " has a negative entry");
    }
    if (data.demands[k] < 1) {
      throw InvalidArgumentError("demand of job type " + std::to_string(k) + " must be positive");
    }
    if (std::all_of(row.begin(), row.end(), [](Count c) { return c == 0; })) {
      throw InfeasibleTypeError(k);
    }
  }
}

InstanceData strip_zero_demands(InstanceData data) {
  InstanceData out;
  out.max_config = data.max_config;
  out.num_periods = data.num_periods;
  out.num_types = data.num_types;
  // Shape mismatches are left for validate() to report.
  if (data.capacities.size() != data.demands.size()) return data;
  for (std::size_t k = 0; k < data.demands.size(); ++k) {
    if (data.demands[k] == 0) {
      --out.num_types;
      continue;
    }
    out.capacities.push_back(std::move(data.capacities[k]));
    out.demands.push_back(data.demands[k]);
  }
  return out;
}

Instance::Instance(InstanceData data) : data_(std::move(data)) { validate(data_); }

std::string to_string(HalfInt h) {
  if (h.is_integer()) return std::to_string(h.doubled / 2);
  return std::to_string(h.doubled / 2) + ".5";
}

Count Packing::count(int config, int type) const {
  auto it = counts_.find({config, type});
  return it == counts_.end() ? 0 : it->second;
}

void Packing::set(int config, int type, Count n) {
  if (n < 0) throw InvalidArgumentError("packing counts must be non-negative");
  if (n == 0) {
    counts_.erase({config, type});
  } else {
    counts_[{config, type}] = n;
  }
}

void Packing::add(int config, int type, Count n) {
  set(config, type, checked_add(count(config, type), n));
}

Count volume(const Packing& packing) {
  Count total = 0;
  for (const auto& [key, n] : packing.entries()) {
    total = checked_add(total, checked_mul(key.first, n));
  }
  return total;
}

int maximum(const Packing& packing) {
  int best = 0;
  for (const auto& [key, n] : packing.entries()) best = std::max(best, key.first);
  return best;
}

HalfInt scale(const Packing& packing, Count lambda) {
  Count doubled = 0;
  for (const auto& [key, n] : packing.entries()) {
    switch (classify(key.first, lambda)) {
      case ScaleClass::kBig: doubled = checked_add(doubled, checked_mul(2, n)); break;
      case ScaleClass::kMedium: doubled = checked_add(doubled, n); break;
      case ScaleClass::kSmall: break;
    }
  }
  return HalfInt{doubled};
}

Count production(const Instance& instance, const Packing& packing, int type) {
  Count total = 0;
  for (const auto& [key, n] : packing.entries()) {
    if (key.second != type || key.first > instance.max_config()) continue;
    total = checked_add(total, checked_mul(instance.capacity(type, key.first), n));
  }
  return total;
}

bool satisfies_demands(const Instance& instance, const Packing& packing) {
  for (int k = 0; k < instance.num_types(); ++k) {
    if (production(instance, packing, k) < instance.demand(k)) return false;
  }
  return true;
}

std::vector<Count> Schedule::heights() const {
  std::vector<Count> h;
  h.reserve(periods_.size());
  for (const auto& p : periods_) h.push_back(volume(p));
  return h;
}

Count Schedule::height() const {
  Count best = 0;
  for (const auto& p : periods_) best = std::max(best, volume(p));
  return best;
}

Packing Schedule::associated_packing() const {
  Packing sum;
  for (const auto& p : periods_) {
    for (const auto& [key, n] : p.entries()) sum.add(key.first, key.second, n);
  }
  return sum;
}

bool satisfies_demands(const Instance& instance, const Schedule& schedule) {
  return satisfies_demands(instance, schedule.associated_packing());
}

int optimal_configuration(const Instance& instance, int type) {
  int best = 1;
  for (int p = 2; p <= instance.max_config(); ++p) {
    // c[p] / p > c[best] / best, cross-multiplied.
    if (checked_mul(instance.capacity(type, p), best) >
        checked_mul(instance.capacity(type, best), p)) {
      best = p;
    }
  }
  return best;
}

Schedule normalize_schedule(const Instance& instance, const Schedule& schedule) {
  Schedule out = schedule;
  for (int t = 0; t < out.num_periods(); ++t) {
    Packing& period = out.period(t);
    for (int k = 0; k < instance.num_types(); ++k) {
      const int p0 = optimal_configuration(instance, k);
      for (int p = 1; p <= instance.max_config(); ++p) {
        if (p == p0) continue;
        const Count x = period.count(p, k);
        if (x <= p0) continue;
        const Count q = x / p0;
        // p0*q p-resources become p*q p0-resources: same head count.
        period.set(p, k, x - checked_mul(p0, q));
        period.add(p0, k, checked_mul(p, q));
      }
    }
  }
  return out;
}

}  // namespace multibot
