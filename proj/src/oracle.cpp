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

#include "multibot/oracle.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "multibot/approx.hpp"
#include "multibot/checked.hpp"
#include "multibot/errors.hpp"

namespace multibot::oracle {

namespace {

void charge(std::uint64_t& counter, std::uint64_t amount, const Options& options,
            const char* what) {
  counter += amount;
  if (counter > options.state_budget) {
    throw TooLargeError(std::string("oracle budget exceeded while enumerating ") + what);
  }
}

// For one type: the best clamped production with volume <= v, and a
// normal-form packing (counts per configuration) achieving it.
struct TypeTable {
  std::vector<Count> made;
  std::vector<std::vector<Count>> counts;
};

TypeTable best_production(const Instance& instance, int type, Count height,
                          const Options& options) {
  const int max_p = instance.max_config();
  const int p0 = optimal_configuration(instance, type);
  const Count demand = instance.demand(type);
  TypeTable best{std::vector<Count>(height + 1, -1),
                 std::vector<std::vector<Count>>(height + 1, std::vector<Count>(max_p + 1, 0))};
  std::vector<Count> x(max_p + 1, 0);
  std::uint64_t visited = 0;

  std::function<void(int, Count, Count)> walk = [&](int p, Count used, Count made) {
    if (p > max_p) {
      charge(visited, 1, options, "per-period packings");
      const Count clamped = std::min(made, demand);
      if (clamped > best.made[used]) {
        best.made[used] = clamped;
        best.counts[used] = x;
      }
      return;
    }
    const Count room = (height - used) / p;
    const Count limit = p == p0 ? room : std::min<Count>(p0, room);
    for (Count n = 0; n <= limit; ++n) {
      x[p] = n;
      walk(p + 1, used + n * p, checked_add(made, checked_mul(n, instance.capacity(type, p))));
    }
    x[p] = 0;
  };
  walk(1, 0, 0);
  for (Count v = 1; v <= height; ++v) {
    if (best.made[v - 1] >= best.made[v]) {
      best.made[v] = best.made[v - 1];
      best.counts[v] = best.counts[v - 1];
    }
  }
  return best;
}

// A maximal per-period production vector and the per-type volumes giving it.
struct Choice {
  std::vector<Count> made;
  std::vector<Count> volumes;
};

std::vector<Choice> period_choices(const Instance& instance, const std::vector<TypeTable>& tables,
                                   Count height, const Options& options) {
  const int types = instance.num_types();
  std::vector<Choice> found;
  Choice current{std::vector<Count>(types, 0), std::vector<Count>(types, 0)};
  std::uint64_t visited = 0;
  // Productions are monotone in volume, so splits using all of H dominate.
  std::function<void(int, Count)> split = [&](int k, Count left) {
    if (k == types - 1) {
      charge(visited, 1, options, "volume splits");
      current.made[k] = tables[k].made[left];
      current.volumes[k] = left;
      found.push_back(current);
      return;
    }
    for (Count v = 0; v <= left; ++v) {
      current.made[k] = tables[k].made[v];
      current.volumes[k] = v;
      split(k + 1, left - v);
    }
  };
  split(0, height);

  std::stable_sort(found.begin(), found.end(),
                   [](const Choice& a, const Choice& b) { return a.made > b.made; });
  std::vector<Choice> maximal;
  for (auto& cand : found) {
    const bool dominated = std::any_of(maximal.begin(), maximal.end(), [&](const Choice& m) {
      for (int k = 0; k < types; ++k) {
        if (m.made[k] < cand.made[k]) return false;
      }
      return true;
    });
    if (!dominated) maximal.push_back(std::move(cand));
  }
  return maximal;
}

// DP over periods on the covered-demand vector. Returns the witness when
// asked for one, otherwise an empty schedule on success.
std::optional<Schedule> search(const Instance& instance, Count height, const Options& options,
                               bool want_witness) {
  if (height < 0) throw InvalidArgumentError("height must be non-negative");
  if (height == 0) return std::nullopt;

  const int types = instance.num_types();
  const int periods = instance.num_periods();
  // Mixed-radix encoding of the covered-demand vector.
  std::vector<std::uint64_t> stride(types);
  std::uint64_t states = 1;
  for (int k = 0; k < types; ++k) {
    stride[k] = states;
    const auto radix = static_cast<std::uint64_t>(instance.demand(k)) + 1;
    if (radix > options.state_budget || states > options.state_budget / radix) {
      throw TooLargeError("oracle demand state space exceeds the budget");
    }
    states *= radix;
  }

  std::vector<TypeTable> tables;
  for (int k = 0; k < types; ++k) tables.push_back(best_production(instance, k, height, options));
  const auto choices = period_choices(instance, tables, height, options);
  if (!choices.empty() && states > options.state_budget * 16 / choices.size()) {
    throw TooLargeError("oracle search would exceed its work budget");
  }

  // history[t]: states reachable after t periods (kept only for the witness).
  std::vector<std::vector<std::uint8_t>> history;
  std::vector<std::uint8_t> reached(states, 0);
  reached[0] = 1;
  const std::uint64_t full = states - 1;
  auto apply = [&](std::uint64_t s, const Choice& c) {
    std::uint64_t code = 0;
    for (int k = 0; k < types; ++k) {
      const Count have = static_cast<Count>(s / stride[k] % (instance.demand(k) + 1));
      code += static_cast<std::uint64_t>(std::min(instance.demand(k), have + c.made[k])) *
              stride[k];
    }
    return code;
  };

  int used_periods = 0;
  while (used_periods < periods && !reached[full]) {
    std::vector<std::uint8_t> next(states, 0);
    for (std::uint64_t s = 0; s < states; ++s) {
      if (!reached[s]) continue;
      for (const auto& c : choices) next[apply(s, c)] = 1;
    }
    if (want_witness) history.push_back(std::move(reached));
    reached = std::move(next);
    ++used_periods;
  }
  if (!reached[full]) return std::nullopt;

  Schedule schedule(periods);
  if (!want_witness) return schedule;
  std::uint64_t s = full;
  for (int t = used_periods - 1; t >= 0; --t) {
    const auto& before = history[t];
    bool found = false;
    for (std::uint64_t q = 0; q < states && !found; ++q) {
      if (!before[q]) continue;
      for (const auto& c : choices) {
        if (apply(q, c) != s) continue;
        for (int k = 0; k < types; ++k) {
          const auto& counts = tables[k].counts[c.volumes[k]];
          for (int p = 1; p <= instance.max_config(); ++p) {
            if (counts[p] > 0) schedule.period(t).add(p, k, counts[p]);
          }
        }
        s = q;
        found = true;
        break;
      }
    }
  }
  return schedule;
}

}  // namespace

bool feasible_with_height(const Instance& instance, Count height, const Options& options) {
  return search(instance, height, options, false).has_value();
}

std::optional<Schedule> witness_schedule(const Instance& instance, Count height,
                                         const Options& options) {
  return search(instance, height, options, true);
}

Count lower_bound(const Instance& instance) {
  // Type k needs volume >= d_k * p0 / c[k][p0], the best rate available.
  Count vol = 0;
  for (int k = 0; k < instance.num_types(); ++k) {
    const int p0 = optimal_configuration(instance, k);
    vol = checked_add(vol, ceil_div(checked_mul(instance.demand(k), p0),
                                    instance.capacity(k, p0)));
  }
  return std::max<Count>(1, ceil_div(vol, instance.num_periods()));
}

Count exact_solve(const Instance& instance, Count upper_bound, const Options& options) {
  Count lo = lower_bound(instance);
  Count hi = upper_bound;
  if (lo > hi) throw InvalidArgumentError("upper bound is below the volume lower bound");
  while (lo < hi) {
    const Count mid = lo + (hi - lo) / 2;
    if (feasible_with_height(instance, mid, options)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  // The search never probes the upper bound itself; confirm it rather than
  // trusting whoever supplied it.
  if (lo == upper_bound && !feasible_with_height(instance, lo, options)) {
    throw InvalidArgumentError("upper bound is not a feasible height");
  }
  return lo;
}

Count exact_solve(const Instance& instance, const Options& options) {
  return exact_solve(instance, approx::bot_approx(instance).best.height(), options);
}

}  // namespace multibot::oracle
