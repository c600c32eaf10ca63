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

// Subcommands of the `subcheck` tool, callable without a process boundary.

#ifndef SUBCHECK_COMMANDS_H_
#define SUBCHECK_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subcheck/oracle.h"

namespace subcheck {

// Process exit codes for `check`.
inline constexpr int kExitSubstitutable = 0;
inline constexpr int kExitNotSubstitutable = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitOracleDisagreement = 3;

struct CheckOptions {
  bool all = false;
  bool oracle = false;
  bool json = false;
  bool timing = true;
  unsigned threads = 1;
  std::size_t cache = 0;
  std::size_t oracle_max_u = kDefaultOracleMaxU;
};

int run_check(const std::filesystem::path& path, const CheckOptions& options,
              std::ostream& out, std::ostream& err);
int check_text(std::string_view text, const CheckOptions& options, std::ostream& out,
               std::ostream& err);

struct GenOptions {
  std::uint64_t seed = 1;
  std::size_t u = 5;
  std::size_t ell = 10;
  std::size_t max_class = 3;
  std::string family = "uniform-weak";
  std::size_t count = 1;
  std::optional<std::filesystem::path> out_dir;
};

// Instance i uses seed + i. Without out_dir, instances go to `out`, each
// preceded by a "# seed=N" comment line.
int run_gen(const GenOptions& options, std::ostream& out, std::ostream& err);

struct BenchOptions {
  std::vector<std::size_t> u_values{16};
  std::vector<std::size_t> ell_values{50, 100, 200, 400};
  std::vector<std::size_t> s_values{1};
  std::size_t reps = 3;
  std::uint64_t seed = 1;
  // Run every candidate (enumerate-all) rather than stopping at the first
  // witness, so random non-substitutable inputs still exercise the full scan.
  bool exhaustive = true;
  unsigned threads = 1;
  bool json = false;
};

struct BenchPoint {
  std::string varied;  // parameter swept by this point's series
  std::size_t u = 0;
  std::size_t ell = 0;  // non-empty acceptable sets requested
  std::size_t s = 0;    // class-size cap; 1 selects the strict family
  std::vector<double> times_ms;
  double median_ms = 0.0;
};

struct BenchReport {
  std::vector<BenchPoint> points;
  std::map<std::string, double> slopes;  // log-log slope per swept parameter
};

// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

// The first value of every range is the base point; each range with more than
// one value is swept with the others held at their base. Rep r of a point uses
// a fresh instance with seed + r.
BenchReport run_benchmark(const BenchOptions& options);

int run_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);

// "50,100,200" -> {50, 100, 200}. Throws std::invalid_argument on bad input.
std::vector<std::size_t> parse_range(std::string_view text);

}  // namespace subcheck

#endif  // SUBCHECK_COMMANDS_H_
