// Copyright 2026 The Subcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// subcheck: test preference lists for substitutability.
//
//   subcheck check FILE [--all] [--oracle] [--json] [--threads N]
//   subcheck gen [--seed S] [--u N] [--ell N] [--max-class N] [--family F]
//                [--count N] [--out-dir DIR]
//   subcheck bench [--u-range L] [--ell-range L] [--s-range L] [--reps N]
//                  [--json]

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "subcheck/commands.h"

int main(int argc, char** argv) {
  CLI::App app{"Substitutability checker for weak preference lists"};
  app.require_subcommand(1);

  subcheck::CheckOptions check;
  std::string check_path;
  bool no_timing = false;
  auto* check_cmd = app.add_subcommand("check", "Test one preference-list file");
  check_cmd->add_option("path", check_path, "Preference-list file")->required();
  check_cmd->add_flag("--all", check.all, "Enumerate every restricted-form witness");
  check_cmd->add_flag("--oracle", check.oracle,
                      "Cross-check with the exhaustive oracle (small u only)");
  check_cmd->add_flag("--json", check.json, "JSON report on stdout");
  check_cmd->add_option("--threads", check.threads, "Search workers")
      ->envname("SUBCHECK_THREADS")
      ->check(CLI::PositiveNumber);
  check_cmd->add_option("--cache", check.cache, "Per-worker choice cache entries (0 = off)");
  check_cmd->add_option("--max-u", check.oracle_max_u, "Largest universe the oracle accepts");
  check_cmd->add_flag("--no-timing", no_timing, "Omit timing from the report");

  subcheck::GenOptions gen;
  std::string out_dir;
  auto* gen_cmd = app.add_subcommand("gen", "Generate random preference lists");
  gen_cmd->add_option("--seed", gen.seed, "First seed");
  gen_cmd->add_option("--u", gen.u, "Universe size");
  gen_cmd->add_option("--ell", gen.ell, "Non-empty acceptable sets");
  gen_cmd->add_option("--max-class", gen.max_class, "Largest indifference class");
  gen_cmd->add_option("--family", gen.family, "uniform-weak | strict | additive-capacity");
  gen_cmd->add_option("--count", gen.count, "Number of instances");
  gen_cmd->add_option("--out-dir", out_dir, "Write one file per instance here");

  subcheck::BenchOptions bench;
  std::string u_range = "16", ell_range = "50,100,200,400", s_range = "1";
  std::string bench_mode = "exhaustive";
  auto* bench_cmd = app.add_subcommand("bench", "Measure scaling of the search");
  bench_cmd->add_option("--u-range", u_range, "Comma-separated universe sizes");
  bench_cmd->add_option("--ell-range", ell_range, "Comma-separated list lengths");
  bench_cmd->add_option("--s-range", s_range, "Comma-separated class-size caps");
  bench_cmd->add_option("--reps", bench.reps, "Instances per point");
  bench_cmd->add_option("--seed", bench.seed, "First seed");
  bench_cmd->add_option("--mode", bench_mode, "exhaustive | first-witness")
      ->check(CLI::IsMember({"exhaustive", "first-witness"}));
  bench_cmd->add_option("--threads", bench.threads, "Search workers")
      ->envname("SUBCHECK_THREADS")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--json", bench.json, "JSON report on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : subcheck::kExitInputError;
  }

  if (*check_cmd) {
    check.timing = !no_timing;
    return subcheck::run_check(check_path, check, std::cout, std::cerr);
  }
  if (*gen_cmd) {
    if (!out_dir.empty()) gen.out_dir = out_dir;
    return subcheck::run_gen(gen, std::cout, std::cerr);
  }
  try {
    bench.u_values = subcheck::parse_range(u_range);
    bench.ell_values = subcheck::parse_range(ell_range);
    bench.s_values = subcheck::parse_range(s_range);
  } catch (const std::invalid_argument& e) {
    std::cerr << "bench: " << e.what() << "\n";
    return subcheck::kExitInputError;
  }
  bench.exhaustive = bench_mode == "exhaustive";
  return subcheck::run_bench(bench, std::cout, std::cerr);
}
