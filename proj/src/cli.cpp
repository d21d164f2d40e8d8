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

#include "multibot/cli.hpp"

#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "multibot/approx.hpp"
#include "multibot/errors.hpp"
#include "multibot/generator.hpp"
#include "multibot/io.hpp"
#include "multibot/oracle.hpp"

namespace multibot::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t micros_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

int solve_command(const std::string& path, int jobs, std::ostream& out) {
  const Instance instance = io::parse_instance(path);
  const auto solve = approx::bot_approx(instance, {jobs});
  out << io::to_json(io::make_report(instance, solve));
  return kOk;
}

int oracle_command(const std::string& path, std::uint64_t budget, std::ostream& out) {
  const Instance instance = io::parse_instance(path);
  const auto start = Clock::now();
  io::Report report;
  report.instance_digest = io::digest(instance);
  report.oracle_height = oracle::exact_solve(instance, oracle::Options{budget});
  report.timings_us = {{"oracle", micros_since(start)}};
  out << io::to_json(report);
  return kOk;
}

int compare_command(const std::string& path, int jobs, std::uint64_t budget, std::ostream& out,
                    std::ostream& err) {
  const Instance instance = io::parse_instance(path);
  const auto solve = approx::bot_approx(instance, {jobs});
  io::Report report = io::make_report(instance, solve);
  const auto start = Clock::now();
  report.oracle_height = oracle::exact_solve(instance, solve.best.height(), oracle::Options{budget});
  report.timings_us.emplace_back("oracle", micros_since(start));
  out << io::to_json(report);
  if (!report.ratio_ok()) {
    err << "error: approximation guarantee violated: 3H = " << 3 * *report.best_height
        << " > 4H* = " << 4 * *report.oracle_height << "\n";
    return kGuaranteeViolated;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reconfigurable-resource scheduling: 4/3-approximation and exact oracle",
               "multibot"};
  app.require_subcommand(1);

  std::string path;
  int jobs = 1;
  std::uint64_t budget = oracle::Options{}.state_budget;

  auto* solve = app.add_subcommand("solve", "Run the approximation and print a report");
  solve->add_option("file", path, "Instance file")->required();
  solve->add_option("--jobs", jobs, "Worker threads for the per-lambda solves")
      ->check(CLI::PositiveNumber);

  auto* exact = app.add_subcommand("oracle", "Compute the exact optimum height");
  exact->add_option("file", path, "Instance file")->required();
  exact->add_option("--budget", budget, "Oracle state budget");

  auto* compare = app.add_subcommand("compare", "Run both and check 3H <= 4H*");
  compare->add_option("file", path, "Instance file")->required();
  compare->add_option("--jobs", jobs, "Worker threads for the per-lambda solves")
      ->check(CLI::PositiveNumber);
  compare->add_option("--budget", budget, "Oracle state budget");

  gen::Params params;
  auto* generate = app.add_subcommand("gen", "Write a seeded random instance to standard output");
  generate->add_option("--seed", params.seed, "PRNG seed")->required();
  generate->add_option("--k", params.num_types, "Job types")->required();
  generate->add_option("--p", params.max_config, "Largest configuration")->required();
  generate->add_option("--t", params.num_periods, "Periods")->required();
  generate->add_option("--cmax", params.cmax, "Largest capacity")->required();
  generate->add_option("--dmax", params.dmax, "Largest demand")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (solve->parsed()) return solve_command(path, jobs, out);
    if (exact->parsed()) return oracle_command(path, budget, out);
    if (compare->parsed()) return compare_command(path, jobs, budget, out, err);
    if (generate->parsed()) {
      out << gen::generate_text(params);
      return kOk;
    }
  } catch (const InfeasibleTypeError& e) {
    err << "error: infeasible instance: " << e.what() << "\n";
    return kInfeasible;
  } catch (const TooLargeError& e) {
    err << "error: " << e.what() << "\n";
    return kTooLarge;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace multibot::cli
