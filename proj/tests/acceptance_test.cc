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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "subcheck/choice.h"
#include "subcheck/commands.h"
#include "subcheck/generate.h"
#include "subcheck/oracle.h"
#include "subcheck/parse.h"
#include "subcheck/subtest.h"

namespace subcheck {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

// 1. Golden example: stats, two choice values, verdict and the enumerated
// witness, all within one second.
Outcome golden_relation() {
  const auto start = Clock::now();
  const PreferenceList pref =
      parse_preference_list("{a,b,d} ~ {b,c,d} / {a,b} ~ {b,c} ~ {a,c} / {}");
  const Universe& u = pref.universe();
  std::string why;
  if (!(pref.stats() == PreferenceStats{4, 6, 3})) why += " stats";
  if (choice(pref, u.full()).chosen !=
      std::vector{u.make_set({"a", "b", "d"}), u.make_set({"b", "c", "d"})}) {
    why += " C(U)";
  }
  if (choice(pref, u.make_set({"a"})).chosen != std::vector{AltSet{}}) why += " C({a})";

  const Verdict first = test_substitutability(pref);
  if (first.substitutable || !first.s2) why += " verdict";
  if (first.s1) {
    why += " S1 violated at A=" + u.format(first.s1->a) + " B=" + u.format(first.s1->b) +
           " failing=" + u.format(first.s1->failing) + " (oracle agrees: " +
           std::to_string(brute_force_test(pref).s1_violations.size()) + " S1 violations)";
  }

  SearchOptions all;
  all.mode = SearchMode::kEnumerateAll;
  const Verdict every = test_substitutability(pref, all);
  bool found = false;
  for (const Witness& w : *every.all_witnesses) {
    found |= w.kind == ViolationKind::kS2 && w.a == u.full() &&
             w.b == u.make_set({"a", "b", "c"}) && w.failing == u.make_set({"a", "c"});
  }
  if (!found) why += " enumerated-witness";
  const double secs = seconds_since(start);
  if (secs >= 1.0) why += " runtime";
  return {why.empty(), "u=4 ell=6 s=3, S2 witness (U,{a,b,c},{a,c}), " +
                           std::to_string(secs * 1e3) + " ms" +
                           (why.empty() ? "" : "; failed:" + why)};
}

std::vector<GenSpec> small_batch(GenFamily family, std::size_t count, std::uint64_t seed0) {
  std::mt19937_64 rng(seed0);
  std::vector<GenSpec> batch;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t u = 2 + rng() % 5;  // 2..6
    const std::size_t available = (std::size_t{1} << u) - 1;
    const std::size_t target = 1 + rng() % std::min<std::size_t>(14, available);  // ell <= 15
    const std::size_t max_class = family == GenFamily::kStrict ? 1 : 1 + rng() % 5;
    batch.push_back({seed0 + i, u, target, max_class, family});
  }
  return batch;
}

Outcome differential(GenFamily family, std::uint64_t seed0) {
  const auto start = Clock::now();
  const auto batch = small_batch(family, 1500, seed0);
  const DifferentialReport r = differential_run(batch);
  const double secs = seconds_since(start);
  std::string detail = std::to_string(r.agreements) + "/" + std::to_string(r.instances) +
                       " agree (" + std::to_string(r.non_substitutable) +
                       " non-substitutable), " + std::to_string(secs) + " s";
  if (!r.failures.empty()) {
    detail += "; first failure seed " + std::to_string(r.failures[0].seed) + ": " +
              r.failures[0].problem;
  }
  return {r.passed() && r.instances >= 1000 && secs <= 300.0, detail};
}

// 4. Restriction property on sampled triples and exhaustively on small lists.
Outcome restriction_suite() {
  std::mt19937_64 rng(2024);
  std::size_t sampled = 0, sampled_ok = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const std::size_t u = 1 + rng() % 8;
    const std::size_t target = 1 + rng() % std::min<std::size_t>(30, (std::size_t{1} << u) - 1);
    const PreferenceList pref =
        generate({seed, u, target, 1 + rng() % 4,
                  rng() % 2 ? GenFamily::kUniformWeak : GenFamily::kStrict});
    const std::uint64_t full = (std::uint64_t{1} << u) - 1;
    const std::uint64_t a = rng() & full;
    const std::uint64_t b = a & rng();
    ++sampled;
    sampled_ok += lemma1_holds(pref, AltSet::from_mask(a), AltSet::from_mask(b));
  }

  std::size_t pairs = 0, pairs_ok = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t u = 1 + seed % 5;
    const std::size_t target = 1 + (seed * 7) % ((std::size_t{1} << u) - 1);
    const PreferenceList pref = generate({seed + 90000, u, target, 3, GenFamily::kUniformWeak});
    const std::uint64_t full = (std::uint64_t{1} << u) - 1;
    for (std::uint64_t a = 0; a <= full; ++a) {
      for (std::uint64_t b = a;; b = (b - 1) & a) {
        ++pairs;
        pairs_ok += lemma1_holds(pref, AltSet::from_mask(a), AltSet::from_mask(b));
        if (b == 0) break;
      }
    }
  }
  return {sampled_ok == sampled && pairs_ok == pairs,
          std::to_string(sampled_ok) + "/" + std::to_string(sampled) + " sampled, " +
              std::to_string(pairs_ok) + "/" + std::to_string(pairs) +
              " exhaustive pairs over 50 lists"};
}

// 5. Every emitted witness on 1000 non-substitutable lists passes verification.
Outcome witness_soundness() {
  std::size_t instances = 0, witnesses = 0, bad = 0;
  SearchOptions all;
  all.mode = SearchMode::kEnumerateAll;
  all.deduplicate = false;
  std::mt19937_64 rng(77);
  for (std::uint64_t seed = 0; instances < 1000 && seed < 100000; ++seed) {
    const std::size_t u = 2 + rng() % 7;
    const std::size_t target = 1 + rng() % std::min<std::size_t>(40, (std::size_t{1} << u) - 1);
    const PreferenceList pref = generate({seed, u, target, 1 + rng() % 4,
                                          rng() % 3 ? GenFamily::kUniformWeak
                                                    : GenFamily::kStrict});
    const Verdict first = test_substitutability(pref);
    if (first.substitutable) continue;
    ++instances;
    for (const auto* w : {&first.s1, &first.s2}) {
      if (!*w) continue;
      ++witnesses;
      bad += !verify_witness(pref, **w);
    }
    const Verdict every = test_substitutability(pref, all);
    for (const Witness& w : *every.all_witnesses) {
      ++witnesses;
      bad += !verify_witness(pref, w);
    }
  }
  return {instances >= 1000 && bad == 0,
          std::to_string(witnesses) + " witnesses on " + std::to_string(instances) +
              " non-substitutable lists, " + std::to_string(bad) + " false"};
}

// 6. Reports are byte-identical for 1, 4 and 16 workers.
Outcome thread_determinism() {
  std::size_t identical = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t u = 4 + seed % 5;
    const std::size_t target = std::min<std::size_t>(10 + seed % 40, (std::size_t{1} << u) - 1);
    const PreferenceList pref = generate({seed, u, target, 1 + seed % 4, GenFamily::kUniformWeak});
    const std::string text = canonical_form(pref);
    for (bool all : {false, true}) {
      std::vector<std::string> reports;
      for (unsigned threads : {1u, 4u, 16u}) {
        CheckOptions o;
        o.json = true;
        o.timing = false;
        o.all = all;
        o.threads = threads;
        std::ostringstream out, err;
        check_text(text, o, out, err);
        reports.push_back(out.str());
      }
      ++total;
      identical += reports[0] == reports[1] && reports[0] == reports[2];
    }
  }
  return {identical == total, std::to_string(identical) + "/" + std::to_string(total) +
                                  " report triples identical (100 lists x 2 modes)"};
}

// 7. Runtime trend in ell at u=16, s=1, and one larger instance.
Outcome scaling() {
  BenchOptions o;
  o.u_values = {16};
  o.ell_values = {50, 100, 200, 400};
  o.s_values = {1};
  o.reps = 5;
  const BenchReport bench = run_benchmark(o);
  const double slope = bench.slopes.at("ell");

  const PreferenceList big = generate({5, 20, 200, 5, GenFamily::kUniformWeak});
  const auto start = Clock::now();
  test_substitutability(big);
  SearchOptions all;
  all.mode = SearchMode::kEnumerateAll;
  test_substitutability(big, all);
  const double secs = seconds_since(start);

  std::string medians;
  for (const BenchPoint& p : bench.points) {
    medians += (medians.empty() ? "" : ", ") + std::to_string(p.ell) + ":" +
               std::to_string(p.median_ms) + "ms";
  }
  return {slope <= 3.5 && secs < 10.0 && big.stats().s <= 5,
          "slope(ell)=" + std::to_string(slope) + " [" + medians + "]; u=20 ell=201 s=" +
              std::to_string(big.stats().s) + " in " + std::to_string(secs) + " s"};
}

}  // namespace
}  // namespace subcheck

int main() {
  using subcheck::Outcome;
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"AC1 golden relation", subcheck::golden_relation},
      {"AC2 oracle equivalence (uniform-weak)",
       [] { return subcheck::differential(subcheck::GenFamily::kUniformWeak, 1000); }},
      {"AC3 oracle equivalence (strict)",
       [] { return subcheck::differential(subcheck::GenFamily::kStrict, 500000); }},
      {"AC4 restriction property", subcheck::restriction_suite},
      {"AC5 witness soundness", subcheck::witness_soundness},
      {"AC6 determinism across threads", subcheck::thread_determinism},
      {"AC7 scaling sanity", subcheck::scaling},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
