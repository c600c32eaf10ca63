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

#include "subcheck/commands.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "subcheck/errors.h"
#include "subcheck/generate.h"
#include "subcheck/parse.h"
#include "subcheck/report.h"

namespace subcheck {

using nlohmann::json;

int check_text(std::string_view text, const CheckOptions& options, std::ostream& out,
               std::ostream& err) {
  std::optional<PreferenceList> pref;
  try {
    pref.emplace(parse_preference_list(text));
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ValidationError& e) {
    err << "invalid preference list: " << e.what() << "\n";
    return kExitInputError;
  }

  SearchOptions search;
  search.mode = options.all ? SearchMode::kEnumerateAll : SearchMode::kFirstWitness;
  search.threads = std::max(1u, options.threads);
  search.cache_capacity = options.cache;
  const Verdict verdict = test_substitutability(*pref, search);

  CheckReport report = make_check_report(*pref, verdict, options.all);
  report.mode_oracle = options.oracle;
  if (!options.timing) report.timing_ms.reset();

  if (options.oracle) {
    if (pref->universe().size() > options.oracle_max_u) {
      err << "oracle skipped: u=" << pref->universe().size() << " exceeds --max-u "
          << options.oracle_max_u << "\n";
    } else {
      const OracleVerdict oracle = brute_force_test(*pref, options.oracle_max_u);
      OracleSummary summary;
      summary.substitutable = oracle.substitutable;
      summary.s1_violations = oracle.s1_violations.size();
      summary.s2_violations = oracle.s2_violations.size();
      summary.pairs_checked = oracle.pairs_checked;
      summary.agrees = oracle.substitutable == verdict.substitutable &&
                       oracle.s1_violations.empty() == !verdict.s1 &&
                       oracle.s2_violations.empty() == !verdict.s2;
      report.oracle = summary;
    }
  }

  if (options.json) {
    out << json(report).dump(2) << "\n";
  } else {
    out << render_text(report);
  }

  if (report.oracle && !report.oracle->agrees) {
    err << "differential failure: the exhaustive oracle disagrees with the search\n";
    return kExitOracleDisagreement;
  }
  return report.substitutable ? kExitSubstitutable : kExitNotSubstitutable;
}

int run_check(const std::filesystem::path& path, const CheckOptions& options,
              std::ostream& out, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "cannot read " << path.string() << "\n";
    return kExitInputError;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return check_text(buf.str(), options, out, err);
}

int run_gen(const GenOptions& options, std::ostream& out, std::ostream& err) {
  const auto family = parse_family(options.family);
  if (!family) {
    err << "unknown family '" << options.family
        << "' (expected uniform-weak, strict or additive-capacity)\n";
    return kExitInputError;
  }
  if (options.out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(*options.out_dir, ec);
    if (ec) {
      err << "cannot create " << options.out_dir->string() << ": " << ec.message() << "\n";
      return kExitInputError;
    }
  }
  for (std::size_t i = 0; i < options.count; ++i) {
    const GenSpec spec{options.seed + i, options.u, options.ell, options.max_class, *family};
    std::string text;
    try {
      text = canonical_form(generate(spec));
    } catch (const Error& e) {
      err << "invalid generator spec: " << e.what() << "\n";
      return kExitInputError;
    }
    if (options.out_dir) {
      const auto file = *options.out_dir / ("seed_" + std::to_string(spec.seed) + ".pref");
      std::ofstream f(file, std::ios::binary);
      f << text << "\n";
      if (!f) {
        err << "cannot write " << file.string() << "\n";
        return kExitInputError;
      }
    } else {
      out << "# seed=" << spec.seed << "\n" << text << "\n";
    }
  }
  return 0;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = std::min(x.size(), y.size());
  if (n < 2) return 0.0;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxx == 0 ? 0.0 : sxy / sxx;
}

namespace {

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

BenchPoint measure(const BenchOptions& options, std::string varied, std::size_t u,
                   std::size_t ell, std::size_t s) {
  BenchPoint point{std::move(varied), u, ell, s, {}, 0.0};
  SearchOptions search;
  search.mode = options.exhaustive ? SearchMode::kEnumerateAll : SearchMode::kFirstWitness;
  search.threads = std::max(1u, options.threads);
  const std::size_t reps = std::max<std::size_t>(1, options.reps);
  for (std::size_t r = 0; r < reps; ++r) {
    GenSpec spec{options.seed + r, u, ell, s,
                 s == 1 ? GenFamily::kStrict : GenFamily::kUniformWeak};
    const PreferenceList pref = generate(spec);
    point.times_ms.push_back(test_substitutability(pref, search).stats.elapsed_ms);
  }
  point.median_ms = median(point.times_ms);
  return point;
}

}  // namespace

BenchReport run_benchmark(const BenchOptions& options) {
  if (options.u_values.empty() || options.ell_values.empty() || options.s_values.empty()) {
    throw InfeasibleSpec("bench: every range needs at least one value");
  }
  const std::size_t u0 = options.u_values.front();
  const std::size_t ell0 = options.ell_values.front();
  const std::size_t s0 = options.s_values.front();

  BenchReport report;
  auto sweep = [&](const std::string& name, const std::vector<std::size_t>& values,
                   auto make) {
    if (values.size() < 2) return;
    std::vector<double> xs, ys;
    for (std::size_t v : values) {
      BenchPoint p = make(v);
      xs.push_back(static_cast<double>(v));
      ys.push_back(std::max(p.median_ms, 1e-6));
      report.points.push_back(std::move(p));
    }
    report.slopes[name] = loglog_slope(xs, ys);
  };
  sweep("u", options.u_values,
        [&](std::size_t v) { return measure(options, "u", v, ell0, s0); });
  sweep("ell", options.ell_values,
        [&](std::size_t v) { return measure(options, "ell", u0, v, s0); });
  sweep("s", options.s_values,
        [&](std::size_t v) { return measure(options, "s", u0, ell0, v); });
  if (report.points.empty()) report.points.push_back(measure(options, "none", u0, ell0, s0));
  return report;
}

int run_bench(const BenchOptions& options, std::ostream& out, std::ostream& err) {
  BenchReport report;
  try {
    report = run_benchmark(options);
  } catch (const Error& e) {
    err << "bench: " << e.what() << "\n";
    return kExitInputError;
  }

  if (options.json) {
    json j;
    j["mode"] = options.exhaustive ? "exhaustive" : "first-witness";
    j["reps"] = options.reps;
    j["points"] = json::array();
    for (const BenchPoint& p : report.points) {
      j["points"].push_back({{"varied", p.varied},
                             {"u", p.u},
                             {"ell", p.ell},
                             {"s", p.s},
                             {"times_ms", p.times_ms},
                             {"median_ms", p.median_ms}});
    }
    j["slopes"] = report.slopes;
    out << j.dump(2) << "\n";
    return 0;
  }

  out << std::left << std::setw(8) << "varied" << std::setw(6) << "u" << std::setw(8)
      << "ell" << std::setw(6) << "s" << "median_ms\n";
  for (const BenchPoint& p : report.points) {
    out << std::setw(8) << p.varied << std::setw(6) << p.u << std::setw(8) << p.ell
        << std::setw(6) << p.s << std::fixed << std::setprecision(3) << p.median_ms
        << "\n";
  }
  for (const auto& [name, slope] : report.slopes) {
    out << "log-log slope (" << name << "): " << std::setprecision(3) << slope << "\n";
  }
  return 0;
}

std::vector<std::size_t> parse_range(std::string_view text) {
  std::vector<std::size_t> values;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size() || v == 0) {
      throw std::invalid_argument("bad range value '" + std::string(item) + "'");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw std::invalid_argument("trailing ',' in range");
  }
  if (values.empty()) throw std::invalid_argument("empty range");
  return values;
}

}  // namespace subcheck
