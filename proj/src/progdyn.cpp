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

#include "multibot/progdyn.hpp"

#include <algorithm>
#include <limits>

#include "multibot/checked.hpp"
#include "multibot/errors.hpp"

namespace multibot::progdyn {

namespace {

// Refuse fills whose tables would not fit comfortably in memory.
constexpr std::uint64_t kMaxCells = 300'000'000;

Count capacity_at(const DpProblem& problem, int k, int p) {
  const auto& row = problem.capacities[k];
  return p <= static_cast<int>(row.size()) ? row[p - 1] : 0;
}

}  // namespace

std::string to_string(Lambda lambda) {
  return lambda.is_infinite() ? std::string("inf") : std::to_string(lambda.value());
}

Count scale_budget(Count config, Lambda lambda, Count tau2, Count j) {
  if (lambda.is_infinite()) return tau2;
  return scale_budget(config, static_cast<Count>(lambda.value()), tau2, j);
}

std::size_t DpTables::index(int p, int k, Count w, Count tau2) const {
  const auto wn = static_cast<std::size_t>(volume_cap_ + 1);
  const auto tn = static_cast<std::size_t>(tau2_cap_ + 1);
  const auto layer = static_cast<std::size_t>(k) * (stored_top_ + 1) + stored(p);
  return (layer * wn + static_cast<std::size_t>(w)) * tn + static_cast<std::size_t>(tau2);
}

Count DpTables::table(int p, int k, Count w, Count tau2) const {
  return table_[index(p, k, w, tau2)];
}

bool DpTables::reached(int p, int k, Count w, Count tau2) const {
  return reached_[index(p, k, w, tau2)] != 0;
}

std::optional<Count> DpTables::pack(int p, int k, Count w, Count tau2) const {
  if (p == 0 || table(p, k, w, tau2) == kNegInf) return std::nullopt;
  // Layers above the stored top add nothing: their capacity is zero.
  if (p > stored_top_) return Count{0};
  return pack_[index(p, k, w, tau2)];
}

DpTables build_tables(const DpProblem& problem, DpFill fill) {
  const int num_types = static_cast<int>(problem.capacities.size());
  if (num_types < 1 || problem.demands.size() != problem.capacities.size()) {
    throw BadDimensionError("DP problem needs one demand per capacity row");
  }
  if (problem.volume_cap < 0 || problem.tau2_cap < 0) {
    throw InvalidArgumentError("DP budgets must be non-negative");
  }
  if (problem.volume_cap > std::numeric_limits<std::int32_t>::max()) {
    throw TooLargeError("DP volume budget does not fit the table encoding");
  }
  int row_len = 0;
  for (const auto& row : problem.capacities) row_len = std::max(row_len, static_cast<int>(row.size()));

  DpTables t;
  t.num_types_ = num_types;
  t.lambda_ = problem.lambda;
  t.top_config_ = problem.lambda.is_infinite() ? row_len : problem.lambda.value();
  // Configurations above the row length have zero capacity, so their layers
  // repeat the last real one. The literal fill stores them anyway.
  t.stored_top_ = fill == DpFill::kPerCount ? t.top_config_ : std::min(t.top_config_, row_len);
  t.volume_cap_ = problem.volume_cap;
  t.tau2_cap_ = problem.tau2_cap;

  const std::uint64_t cells = static_cast<std::uint64_t>(num_types) * (t.stored_top_ + 1) *
                              static_cast<std::uint64_t>(t.volume_cap_ + 1) *
                              static_cast<std::uint64_t>(t.tau2_cap_ + 1);
  if (cells > kMaxCells) {
    throw TooLargeError("DP tables would need " + std::to_string(cells) + " cells");
  }
  t.table_.assign(cells, kNegInf);
  t.reached_.assign(cells, 0);
  t.pack_.assign(cells, -1);

  const Count wc = t.volume_cap_;
  const Count tc = t.tau2_cap_;
  const int top = t.stored_top_;

  for (int k = 0; k < num_types; ++k) {
    const Count demand = problem.demands[k];

    // p = 0: nothing of type k; exists iff the earlier demands can be met.
    for (Count w = 0; w <= wc; ++w) {
      for (Count s = 0; s <= tc; ++s) {
        const bool ok = k == 0 || t.reached_[t.index(top, k - 1, w, s)] != 0;
        t.table_[t.index(0, k, w, s)] = ok ? 0 : kNegInf;
      }
    }

    for (int p = 1; p <= top; ++p) {
      const Count cap = capacity_at(problem, k, p);
      for (Count w = 0; w <= wc; ++w) {
        for (Count s = 0; s <= tc; ++s) {
          Count best = kNegInf;
          Count best_j = -1;
          if (fill == DpFill::kPerCount) {
            for (Count j = 0; j * p <= w; ++j) {
              const Count rest = scale_budget(p, problem.lambda, s, j);
              if (rest < 0) break;
              ++t.operations_;
              const Count rw = w - j * p;
              if (k > 0 && t.reached_[t.index(top, k - 1, rw, rest)] == 0) continue;
              const Count sub = t.table_[t.index(p - 1, k, rw, rest)];
              if (sub == kNegInf) continue;
              const Count cand = checked_add(sub, checked_mul(j, cap));
              if (cand > best) {
                best = cand;
                best_j = j;
              }
            }
          } else {
            ++t.operations_;
            best = t.table_[t.index(p - 1, k, w, s)];
            if (best != kNegInf) best_j = 0;
            const Count step = s - scale_budget(p, problem.lambda, s, 1);
            if (w >= p && s >= step) {
              const auto from = t.index(p, k, w - p, s - step);
              if (t.table_[from] != kNegInf) {
                ++t.operations_;
                const Count cand = checked_add(t.table_[from], cap);
                if (cand > best) {
                  best = cand;
                  best_j = t.pack_[from] + 1;
                }
              }
            }
          }
          const auto at = t.index(p, k, w, s);
          t.table_[at] = best;
          t.pack_[at] = static_cast<std::int32_t>(best_j);
          t.reached_[at] = best != kNegInf && best >= demand ? 1 : 0;
        }
      }
    }
  }
  return t;
}

std::optional<Packing> recover(const DpTables& tables, int p, int k, Count w, Count tau2) {
  if (tables.table(p, k, w, tau2) == kNegInf) return std::nullopt;
  Packing out;
  while (true) {
    if (p == 0) {
      if (k == 0) break;
      --k;
      p = tables.top_config();
      continue;
    }
    const auto j = tables.pack(p, k, w, tau2);
    if (!j) throw Error("DP tables are inconsistent during recovery");
    if (*j > 0) out.add(p, k, *j);
    w -= *j * p;
    tau2 = scale_budget(p, tables.lambda(), tau2, *j);
    --p;
  }
  return out;
}

DpProblem one_period_problem(const Instance& instance, int lambda, HalfInt tau) {
  if (lambda < 1 || lambda > 3 * instance.max_config() - 1) {
    throw InvalidArgumentError("lambda must lie in 1.." +
                               std::to_string(3 * instance.max_config() - 1));
  }
  if (tau.doubled < 0 || tau.doubled > 2 * static_cast<Count>(instance.num_periods())) {
    throw InvalidArgumentError("tau must lie in 0..T");
  }
  DpProblem problem;
  problem.capacities = instance.data().capacities;
  problem.demands = instance.data().demands;
  problem.lambda = Lambda::finite(lambda);
  problem.volume_cap = checked_mul(lambda, tau.doubled) / 2;
  problem.tau2_cap = tau.doubled;
  return problem;
}

std::optional<Packing> solve_one_period(const Instance& instance, int lambda, HalfInt tau,
                                        DpFill fill) {
  const DpTables tables = build_tables(one_period_problem(instance, lambda, tau), fill);
  const int last = instance.num_types() - 1;
  // Tables cover every volume budget, so the first reachable W is the
  // minimum volume.
  for (Count w = 0; w <= tables.volume_cap(); ++w) {
    if (tables.reached(tables.top_config(), last, w, tables.tau2_cap())) {
      return recover(tables, tables.top_config(), last, w, tables.tau2_cap());
    }
  }
  return std::nullopt;
}

}  // namespace multibot::progdyn
