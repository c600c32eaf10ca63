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

#include "subcheck/oracle.h"

#include <algorithm>
#include <limits>

#include "subcheck/errors.h"

namespace subcheck {
namespace {

constexpr std::size_t kHardMaxU = 20;
constexpr std::size_t kUnacceptable = std::numeric_limits<std::size_t>::max();

using Mask = std::uint32_t;

// Rank of every subset of U, indexed by its mask. Built straight from the
// classes so it does not go through PreferenceList::class_rank.
std::vector<std::size_t> rank_table(const PreferenceList& pref) {
  const std::size_t u = pref.universe().size();
  std::vector<std::size_t> rank(std::size_t{1} << u, kUnacceptable);
  const auto classes = pref.classes();
  for (std::size_t k = 0; k < classes.size(); ++k) {
    for (const AltSet& s : classes[k]) rank[static_cast<Mask>(s.word(0))] = k;
  }
  return rank;
}

// C(X) for one mask: the subsets of X of least rank, ascending by mask.
std::vector<Mask> choose(const std::vector<std::size_t>& rank, Mask x) {
  std::size_t best = kUnacceptable;
  std::vector<Mask> chosen;
  // Walk every submask of x, including 0 and x itself.
  for (Mask sub = x;; sub = (sub - 1) & x) {
    const std::size_t r = rank[sub];
    if (r < best) {
      best = r;
      chosen.clear();
    }
    if (r == best && r != kUnacceptable) chosen.push_back(sub);
    if (sub == 0) break;
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

void guard(const PreferenceList& pref, std::size_t max_u) {
  const std::size_t u = pref.universe().size();
  const std::size_t cap = std::min(max_u, kHardMaxU);
  if (u > cap) {
    throw UniverseTooLarge("oracle: u=" + std::to_string(u) + " exceeds the cap of " +
                           std::to_string(cap));
  }
}

}  // namespace

std::vector<AltSet> brute_force_choice(const PreferenceList& pref, const AltSet& x) {
  guard(pref, kHardMaxU);
  const auto rank = rank_table(pref);
  std::vector<AltSet> out;
  for (Mask m : choose(rank, static_cast<Mask>(x.word(0)))) {
    out.push_back(AltSet::from_mask(m));
  }
  return out;
}

OracleVerdict brute_force_test(const PreferenceList& pref, std::size_t max_u) {
  guard(pref, max_u);
  const std::size_t u = pref.universe().size();
  const Mask full = static_cast<Mask>((std::uint64_t{1} << u) - 1);
  const auto rank = rank_table(pref);

  std::vector<std::vector<Mask>> chosen(std::size_t{full} + 1);
  for (Mask x = 0;; ++x) {
    chosen[x] = choose(rank, x);
    if (x == full) break;
  }

  OracleVerdict verdict;
  auto record = [](std::vector<OracleViolation>& into, Mask a, Mask b, Mask failing) {
    into.push_back({AltSet::from_mask(a), AltSet::from_mask(b), AltSet::from_mask(failing)});
  };

  for (Mask a = 0;; ++a) {
    const auto& ca = chosen[a];
    for (Mask b = a;; b = (b - 1) & a) {
      ++verdict.pairs_checked;
      if (b != 0) {
        const auto& cb = chosen[b];
        // (S1): every X in C(A) has X & B inside some Z in C(B).
        for (Mask x : ca) {
          const Mask trace = x & b;
          const bool ok = std::any_of(cb.begin(), cb.end(),
                                      [&](Mask z) { return (trace & ~z) == 0; });
          if (!ok) record(verdict.s1_violations, a, b, x);
        }
        // (S2): every Y in C(B) contains Z & B for some Z in C(A).
        for (Mask y : cb) {
          const bool ok = std::any_of(ca.begin(), ca.end(),
                                      [&](Mask z) { return ((z & b) & ~y) == 0; });
          if (!ok) record(verdict.s2_violations, a, b, y);
        }
      }
      if (b == 0) break;
    }
    if (a == full) break;
  }
  verdict.substitutable = verdict.s1_violations.empty() && verdict.s2_violations.empty();
  return verdict;
}

DifferentialCase differential_check(const PreferenceList& pref,
                                    const SearchOptions& options) {
  DifferentialCase result;
  const Verdict tester = test_substitutability(pref, options);
  const OracleVerdict oracle = brute_force_test(pref);
  result.tester_substitutable = tester.substitutable;
  result.oracle_substitutable = oracle.substitutable;

  auto fail = [&](const std::string& why) {
    result.agree = false;
    if (!result.problem.empty()) result.problem += "; ";
    result.problem += why;
  };

  if (tester.substitutable != oracle.substitutable) fail("verdicts differ");
  if (!oracle.s1_violations.empty() && !tester.s1) fail("oracle found an S1 violation the search missed");
  if (oracle.s1_violations.empty() && tester.s1) fail("search reported an S1 violation the oracle did not find");
  if (!oracle.s2_violations.empty() && !tester.s2) fail("oracle found an S2 violation the search missed");
  if (oracle.s2_violations.empty() && tester.s2) fail("search reported an S2 violation the oracle did not find");

  auto check_witness = [&](const std::optional<Witness>& w,
                           const std::vector<OracleViolation>& known) {
    if (!w) return;
    if (!verify_witness(pref, *w)) fail(std::string(to_string(w->kind)) + " witness fails verification");
    const OracleViolation v{w->a, w->b, w->failing};
    if (std::find(known.begin(), known.end(), v) == known.end()) {
      fail(std::string(to_string(w->kind)) + " witness not among the oracle's violations");
    }
  };
  check_witness(tester.s1, oracle.s1_violations);
  check_witness(tester.s2, oracle.s2_violations);
  return result;
}

namespace {

void tally(DifferentialReport& report, DifferentialCase c) {
  ++report.instances;
  if (!c.oracle_substitutable) ++report.non_substitutable;
  if (c.agree) {
    ++report.agreements;
  } else {
    report.failures.push_back(std::move(c));
  }
}

}  // namespace

DifferentialReport differential_run(std::span<const GenSpec> batch,
                                    const SearchOptions& options) {
  DifferentialReport report;
  for (const GenSpec& spec : batch) {
    DifferentialCase c;
    try {
      c = differential_check(generate(spec), options);
    } catch (const Error& e) {
      c.agree = false;
      c.problem = e.what();
    }
    c.seed = spec.seed;
    c.label = std::string(to_string(spec.family)) + " u=" + std::to_string(spec.u) +
              " ell=" + std::to_string(spec.target_ell);
    tally(report, std::move(c));
  }
  return report;
}

DifferentialReport differential_run(std::span<const PreferenceList> batch,
                                    const SearchOptions& options) {
  DifferentialReport report;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    DifferentialCase c;
    try {
      c = differential_check(batch[i], options);
    } catch (const Error& e) {
      c.agree = false;
      c.problem = e.what();
    }
    c.seed = i;
    c.label = "instance " + std::to_string(i);
    tally(report, std::move(c));
  }
  return report;
}

}  // namespace subcheck
