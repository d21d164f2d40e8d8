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

#include "doctest.h"
#include "multibot/errors.hpp"
#include "multibot/progdyn.hpp"
#include "reference.hpp"

using namespace multibot;
using progdyn::DpFill;
using progdyn::kNegInf;

namespace {

HalfInt periods_of(const Instance& inst) { return HalfInt::from_integer(inst.num_periods()); }

void check_packing_feasible(const Instance& inst, const Packing& p, int lambda) {
  CHECK(satisfies_demands(inst, p));
  CHECK(volume(p) <= static_cast<Count>(lambda) * inst.num_periods());
  CHECK(maximum(p) <= lambda);
  CHECK(scale(p, lambda) <= periods_of(inst));
}

}  // namespace

TEST_CASE("scale_budget examples") {
  CHECK(progdyn::scale_budget(1, 5, 4, 100) == 4);
  CHECK(progdyn::scale_budget(2, 5, 6, 4) == 2);
  CHECK(progdyn::scale_budget(4, 5, 6, 2) == 2);
  CHECK(progdyn::scale_budget(4, 5, 1, 1) < 0);
  CHECK(progdyn::scale_budget(4, progdyn::Lambda::infinity(), 0, 7) == 0);
}

TEST_CASE("lambda ordering puts infinity last") {
  using progdyn::Lambda;
  CHECK(Lambda::finite(3) < Lambda::finite(4));
  CHECK(Lambda::finite(100) < Lambda::infinity());
  CHECK(progdyn::to_string(Lambda::infinity()) == "inf");
}

TEST_CASE("solve_one_period on the worked example") {
  const Instance inst = reference::worked_example();
  SUBCASE("lambda 6") {
    const auto p = progdyn::solve_one_period(inst, 6, periods_of(inst));
    REQUIRE(p.has_value());
    check_packing_feasible(inst, *p, 6);
    CHECK(volume(*p) == 17);
  }
  SUBCASE("lambda 1 is infeasible") {
    CHECK_FALSE(progdyn::solve_one_period(inst, 1, periods_of(inst)).has_value());
  }
}

TEST_CASE("solve_one_period fills the whole budget when it must") {
  const Instance inst(InstanceData{1, 1, 1, {{1}}, {2}});
  const auto p = progdyn::solve_one_period(inst, 2, HalfInt::from_integer(1));
  REQUIRE(p.has_value());
  CHECK(p->count(1, 0) == 2);
  CHECK(volume(*p) == 2);
}

TEST_CASE("solve_one_period rejects lambda outside 1..3P-1") {
  const Instance inst = reference::worked_example();
  CHECK_THROWS_AS(progdyn::solve_one_period(inst, 0, periods_of(inst)), InvalidArgumentError);
  CHECK_THROWS_AS(progdyn::solve_one_period(inst, 15, periods_of(inst)), InvalidArgumentError);
  CHECK_THROWS_AS(progdyn::solve_one_period(inst, 3, HalfInt{7}), InvalidArgumentError);
}

TEST_CASE("half-integer scale budgets") {
  // Medium 2-resources at lambda 5 cost half a unit each; tau = 1.5 allows 3.
  const Instance inst(InstanceData{1, 2, 2, {{0, 1}}, {3}});
  const auto p = progdyn::solve_one_period(inst, 5, HalfInt{3});
  REQUIRE(p.has_value());
  CHECK(p->count(2, 0) == 3);
  CHECK_FALSE(progdyn::solve_one_period(inst, 5, HalfInt{2}).has_value());
}

TEST_CASE("both fills produce identical tables") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = reference::random_instance(seed, 3, 4, 3, 5, 20);
    for (int lambda = 1; lambda <= 3 * inst.max_config() - 1; ++lambda) {
      const auto problem = progdyn::one_period_problem(inst, lambda, periods_of(inst));
      const auto fast = progdyn::build_tables(problem, DpFill::kIncremental);
      const auto slow = progdyn::build_tables(problem, DpFill::kPerCount);
      bool same = true;
      for (int k = 0; k < inst.num_types() && same; ++k) {
        for (int p = 0; p <= lambda && same; ++p) {
          for (Count w = 0; w <= fast.volume_cap() && same; ++w) {
            for (Count s = 0; s <= fast.tau2_cap() && same; ++s) {
              same = fast.table(p, k, w, s) == slow.table(p, k, w, s) &&
                     fast.reached(p, k, w, s) == slow.reached(p, k, w, s) &&
                     fast.pack(p, k, w, s) == slow.pack(p, k, w, s);
            }
          }
        }
      }
      CHECK_MESSAGE(same, "seed " << seed << " lambda " << lambda);
    }
  }
}

TEST_CASE("table invariants") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const Instance inst = reference::random_instance(seed, 3, 4, 3, 5, 20);
    for (int lambda = 1; lambda <= 3 * inst.max_config() - 1; ++lambda) {
      const auto t = progdyn::build_tables(
          progdyn::one_period_problem(inst, lambda, periods_of(inst)), DpFill::kPerCount);
      bool ok = true;
      for (int k = 0; k < inst.num_types(); ++k) {
        for (int p = 0; p <= lambda; ++p) {
          for (Count w = 0; w <= t.volume_cap(); ++w) {
            for (Count s = 0; s <= t.tau2_cap(); ++s) {
              const Count v = t.table(p, k, w, s);
              // Monotone in both budgets.
              if (w > 0 && t.table(p, k, w - 1, s) > v) ok = false;
              if (s > 0 && t.table(p, k, w, s - 1) > v) ok = false;
              // Missing cells are exactly those where earlier demands fail.
              if (k > 0 && (v == kNegInf) != !t.reached(lambda, k - 1, w, s)) ok = false;
              if (t.reached(p, k, w, s) && v < inst.demand(k)) ok = false;
              if (t.pack(p, k, w, s).has_value() != (v != kNegInf && p >= 1)) ok = false;
            }
          }
        }
      }
      CHECK_MESSAGE(ok, "seed " << seed << " lambda " << lambda);
    }
  }
}

TEST_CASE("recovered packings reproduce their table entry") {
  for (std::uint64_t seed = 200; seed < 240; ++seed) {
    const Instance inst = reference::random_instance(seed, 3, 4, 3, 5, 20);
    for (int lambda = 1; lambda <= 3 * inst.max_config() - 1; ++lambda) {
      const auto t = progdyn::build_tables(
          progdyn::one_period_problem(inst, lambda, periods_of(inst)));
      const int last = inst.num_types() - 1;
      for (Count w = 0; w <= t.volume_cap(); ++w) {
        const auto p = progdyn::recover(t, lambda, last, w, t.tau2_cap());
        if (t.table(lambda, last, w, t.tau2_cap()) == kNegInf) {
          CHECK_FALSE(p.has_value());
          continue;
        }
        REQUIRE(p.has_value());
        CHECK(production(inst, *p, last) == t.table(lambda, last, w, t.tau2_cap()));
        CHECK(volume(*p) <= w);
        CHECK(maximum(*p) <= lambda);
        CHECK(scale(*p, lambda) <= periods_of(inst));
        for (int k = 0; k < last; ++k) CHECK(production(inst, *p, k) >= inst.demand(k));
      }
    }
  }
}

TEST_CASE("solve_one_period matches brute force on small instances") {
  for (std::uint64_t seed = 300; seed < 360; ++seed) {
    const Instance inst = reference::random_instance(seed, 3, 4, 3, 5, 20);
    for (int lambda = 1; lambda <= 3 * inst.max_config() - 1; ++lambda) {
      const auto got = progdyn::solve_one_period(inst, lambda, periods_of(inst));
      const auto want = reference::min_volume_one_period(inst, lambda);
      REQUIRE_MESSAGE(got.has_value() == want.has_value(), "seed " << seed << " lambda " << lambda);
      if (got) {
        check_packing_feasible(inst, *got, lambda);
        CHECK(volume(*got) == *want);
      }
    }
  }
}

TEST_CASE("operation count stays within the cubic bound") {
  for (std::uint64_t seed = 400; seed < 420; ++seed) {
    const Instance inst = reference::random_instance(seed, 3, 4, 3, 5, 20);
    const Count T = inst.num_periods();
    const Count K = inst.num_types();
    for (int lambda = 1; lambda <= 3 * inst.max_config() - 1; ++lambda) {
      const auto problem = progdyn::one_period_problem(inst, lambda, periods_of(inst));
      const auto bound = static_cast<std::uint64_t>(24 * lambda * lambda * lambda * T * T * T * K);
      CHECK(progdyn::build_tables(problem, DpFill::kPerCount).operations() <= bound);
      CHECK(progdyn::build_tables(problem, DpFill::kIncremental).operations() <= bound);
    }
  }
}
