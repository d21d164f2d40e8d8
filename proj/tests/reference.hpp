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

// Brute-force reference solvers used only by the tests. None of them calls
// into the DP, the induction, LPT or the production oracle.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "multibot/core.hpp"
#include "multibot/generator.hpp"

namespace multibot::reference {

inline Instance worked_example() {
  return Instance(InstanceData{2, 5, 3, {{1, 4, 0, 0, 0}, {1, 2, 3, 4, 5}}, {13, 10}});
}

// The packing associated with the worked schedule: type 0 uses three
// 2-resources and one 1-resource, type 1 uses one 4-, one 3- and three
// 1-resources.
inline Packing worked_example_packing() {
  Packing p;
  p.set(1, 0, 1);
  p.set(2, 0, 3);
  p.set(1, 1, 3);
  p.set(3, 1, 1);
  p.set(4, 1, 1);
  return p;
}

inline Instance random_instance(std::uint64_t seed, int max_k, int max_p, int max_t, Count cmax,
                                Count dmax) {
  gen::Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  gen::Params params;
  params.seed = seed;
  params.num_types = static_cast<int>(rng.uniform(1, max_k));
  params.max_config = static_cast<int>(rng.uniform(1, max_p));
  params.num_periods = static_cast<int>(rng.uniform(1, max_t));
  params.cmax = rng.uniform(1, cmax);
  params.dmax = rng.uniform(1, dmax);
  return Instance(gen::generate(params));
}

// Visits every vector x[1..n] of non-negative counts with sum p * x[p] <= cap.
inline void for_each_count_vector(int n, Count cap,
                                  const std::function<void(const std::vector<Count>&)>& visit) {
  std::vector<Count> x(n + 1, 0);
  std::function<void(int, Count)> rec = [&](int p, Count left) {
    if (p > n) {
      visit(x);
      return;
    }
    for (Count c = 0; c * p <= left; ++c) {
      x[p] = c;
      rec(p + 1, left - c * p);
    }
    x[p] = 0;
  };
  rec(1, cap);
}

// Minimum volume over packings meeting every demand, with volume <= lambda*T,
// configurations <= lambda and doubled lambda-scale <= 2T.
inline std::optional<Count> min_volume_one_period(const Instance& inst, int lambda) {
  const Count vcap = static_cast<Count>(lambda) * inst.num_periods();
  const Count scap = 2 * static_cast<Count>(inst.num_periods());
  const int n = std::min(lambda, inst.max_config());
  // Per type: doubled scale -> least volume.
  std::vector<std::map<Count, Count>> options(inst.num_types());
  for (int k = 0; k < inst.num_types(); ++k) {
    for_each_count_vector(n, vcap, [&](const std::vector<Count>& x) {
      Count vol = 0, made = 0, s2 = 0;
      for (int p = 1; p <= n; ++p) {
        vol += p * x[p];
        made += inst.capacity(k, p) * x[p];
        if (3 * p > 2 * lambda) {
          s2 += 2 * x[p];
        } else if (3 * p > lambda) {
          s2 += x[p];
        }
      }
      if (made < inst.demand(k) || s2 > scap) return;
      auto it = options[k].find(s2);
      if (it == options[k].end() || it->second > vol) options[k][s2] = vol;
    });
  }
  std::map<Count, Count> acc = {{0, 0}};
  for (int k = 0; k < inst.num_types(); ++k) {
    std::map<Count, Count> next;
    for (auto [s, v] : acc) {
      for (auto [s2, v2] : options[k]) {
        if (s + s2 > scap || v + v2 > vcap) continue;
        auto it = next.find(s + s2);
        if (it == next.end() || it->second > v + v2) next[s + s2] = v + v2;
      }
    }
    acc = std::move(next);
  }
  if (acc.empty()) return std::nullopt;
  Count best = acc.begin()->second;
  for (auto [s, v] : acc) best = std::min(best, v);
  return best;
}

// Least volume to meet demand d_k with any configurations, per type.
inline Count min_type_volume(const Instance& inst, int k) {
  // One configuration with positive capacity always works; use the cheapest
  // such single-configuration packing as the search cap.
  Count cap = -1;
  for (int p = 1; p <= inst.max_config(); ++p) {
    const Count c = inst.capacity(k, p);
    if (c == 0) continue;
    const Count v = p * ((inst.demand(k) + c - 1) / c);
    if (cap < 0 || v < cap) cap = v;
  }
  Count best = cap;
  for_each_count_vector(inst.max_config(), cap, [&](const std::vector<Count>& x) {
    Count vol = 0, made = 0;
    for (int p = 1; p <= inst.max_config(); ++p) {
      vol += p * x[p];
      made += inst.capacity(k, p) * x[p];
    }
    if (made >= inst.demand(k)) best = std::min(best, vol);
  });
  return best;
}

inline Count min_volume_unlimited(const Instance& inst) {
  Count total = 0;
  for (int k = 0; k < inst.num_types(); ++k) total += min_type_volume(inst, k);
  return total;
}

// Optimal makespan of P||Cmax by exhaustive search with symmetry pruning.
inline Count ims_optimum(std::vector<Count> sizes, int boxes) {
  std::sort(sizes.rbegin(), sizes.rend());
  std::vector<Count> load(boxes, 0);
  Count best = 0;
  for (Count s : sizes) best += s;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    const Count cur = *std::max_element(load.begin(), load.end());
    if (cur >= best) return;
    if (i == sizes.size()) {
      best = cur;
      return;
    }
    std::set<Count> tried;
    for (int b = 0; b < boxes; ++b) {
      if (!tried.insert(load[b]).second) continue;
      load[b] += sizes[i];
      rec(i + 1);
      load[b] -= sizes[i];
    }
  };
  rec(0);
  return best;
}

// Smallest H admitting a schedule, by enumerating every per-period packing
// of volume <= H and every T-tuple of their (clamped) productions.
inline Count naive_optimum_height(const Instance& inst) {
  const int K = inst.num_types();
  const int P = inst.max_config();
  for (Count h = 1;; ++h) {
    std::set<std::vector<Count>> per_period;
    // All (p, k) variables flattened: index k * P + (p - 1), weight p.
    std::vector<Count> x(K * P, 0);
    std::function<void(int, Count)> rec = [&](int idx, Count left) {
      if (idx == K * P) {
        std::vector<Count> made(K, 0);
        for (int k = 0; k < K; ++k) {
          for (int p = 1; p <= P; ++p) made[k] += inst.capacity(k, p) * x[k * P + p - 1];
          made[k] = std::min(made[k], inst.demand(k));
        }
        per_period.insert(made);
        return;
      }
      const int p = idx % P + 1;
      for (Count c = 0; c * p <= left; ++c) {
        x[idx] = c;
        rec(idx + 1, left - c * p);
      }
      x[idx] = 0;
    };
    rec(0, h);
    std::set<std::vector<Count>> reach = {std::vector<Count>(K, 0)};
    for (int t = 0; t < inst.num_periods(); ++t) {
      std::set<std::vector<Count>> next;
      for (const auto& r : reach) {
        for (const auto& m : per_period) {
          std::vector<Count> s(K);
          for (int k = 0; k < K; ++k) s[k] = std::min(inst.demand(k), r[k] + m[k]);
          next.insert(s);
        }
      }
      reach = std::move(next);
    }
    if (reach.contains(inst.data().demands)) return h;
  }
}

}  // namespace multibot::reference
