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

// Exact dynamic program for the single-period problem with a configuration
// limit lambda, a volume budget and a lambda-scale budget tau.
//
// Table[p][k][W][tau] holds the largest production of type-k jobs by a
// packing that
//   * uses job types 0..k only and configurations 1..p for type k,
//   * meets the demands of types 0..k-1,
//   * has volume at most W and lambda-scale at most tau,
// or kNegInf when no such packing exists. The scale budget is stored doubled
// so half-units stay integral.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multibot/core.hpp"

namespace multibot::progdyn {

inline constexpr Count kNegInf = INT64_MIN;

// Configuration limit: a finite value, or infinity (no limit, no scale
// constraint).
class Lambda {
 public:
  static constexpr Lambda finite(int value) { return Lambda(value); }
  static constexpr Lambda infinity() { return Lambda(0); }

  constexpr bool is_infinite() const { return value_ == 0; }
  constexpr int value() const { return value_; }

  // Finite values order naturally; infinity sorts last.
  friend constexpr std::strong_ordering operator<=>(Lambda a, Lambda b) {
    if (a.is_infinite() || b.is_infinite()) {
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(Lambda, Lambda) = default;

 private:
  constexpr explicit Lambda(int v) : value_(v) {}
  int value_;
};

std::string to_string(Lambda lambda);

// Scale budget (doubled) left after adding j p-resources: unchanged for small
// configurations, minus j for medium, minus 2j for big. Negative means the
// budget is exhausted.
constexpr Count scale_budget(Count config, Count lambda, Count tau2, Count j) {
  switch (classify(config, lambda)) {
    case ScaleClass::kSmall: return tau2;
    case ScaleClass::kMedium: return tau2 - j;
    case ScaleClass::kBig: return tau2 - 2 * j;
  }
  return tau2;
}

Count scale_budget(Count config, Lambda lambda, Count tau2, Count j);

// Input to the table fill. Configurations above the capacity row length have
// zero capacity.
struct DpProblem {
  std::vector<std::vector<Count>> capacities;  // one row per job type
  std::vector<Count> demands;
  Lambda lambda = Lambda::infinity();
  Count volume_cap = 0;  // largest W
  Count tau2_cap = 0;    // largest doubled scale budget
};

// kPerCount evaluates the recurrence literally, trying every count j of
// p-resources per cell. kIncremental derives each cell from the cell j = 1
// step back in the same layer, which yields identical tables in O(1) per cell.
enum class DpFill { kIncremental, kPerCount };

class DpTables {
 public:
  int num_types() const noexcept { return num_types_; }
  // Largest logical configuration index: lambda, or the capacity row length
  // when lambda is infinite.
  int top_config() const noexcept { return top_config_; }
  Count volume_cap() const noexcept { return volume_cap_; }
  Count tau2_cap() const noexcept { return tau2_cap_; }
  const Lambda& lambda() const noexcept { return lambda_; }

  // p in 0..top_config(), k in 0..num_types()-1.
  Count table(int p, int k, Count w, Count tau2) const;
  // True when table(...) reaches the demand of type k (never for p = 0).
  bool reached(int p, int k, Count w, Count tau2) const;
  // Count j of p-resources used by the cell's packing; empty for p = 0 or
  // when the cell does not exist.
  std::optional<Count> pack(int p, int k, Count w, Count tau2) const;

  // Candidate evaluations performed by the fill.
  std::uint64_t operations() const noexcept { return operations_; }

 private:
  friend DpTables build_tables(const DpProblem& problem, DpFill fill);

  std::size_t index(int p, int k, Count w, Count tau2) const;
  int stored(int p) const { return p < stored_top_ ? p : stored_top_; }

  int num_types_ = 0;
  int top_config_ = 0;
  int stored_top_ = 0;
  Count volume_cap_ = 0;
  Count tau2_cap_ = 0;
  Lambda lambda_ = Lambda::infinity();
  std::vector<Count> table_;
  std::vector<std::uint8_t> reached_;
  std::vector<std::int32_t> pack_;  // -1 when empty
  std::uint64_t operations_ = 0;
};

DpTables build_tables(const DpProblem& problem, DpFill fill = DpFill::kIncremental);

// Rebuilds the packing behind table cell (p, k, w, tau2); nullopt when the
// cell holds kNegInf.
std::optional<Packing> recover(const DpTables& tables, int p, int k, Count w, Count tau2);

// The problem solved for one lambda: all instance demands, volume at most
// lambda * tau, configurations at most lambda, lambda-scale at most tau.
DpProblem one_period_problem(const Instance& instance, int lambda, HalfInt tau);

// Minimum-volume packing meeting every demand with volume <= lambda * tau,
// no configuration above lambda and lambda-scale <= tau; nullopt when none
// exists. Requires 1 <= lambda <= 3P - 1 and 0 <= tau <= T.
std::optional<Packing> solve_one_period(const Instance& instance, int lambda, HalfInt tau,
                                        DpFill fill = DpFill::kIncremental);

}  // namespace multibot::progdyn
