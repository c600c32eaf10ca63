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

// Exhaustive ground truth for the substitutability test.
//
// The oracle evaluates both conditions on every pair B subset of A subset of U
// and computes C(X) from its definition (minimum-rank subsets of X, found by
// enumerating all subsets of X). It shares nothing with the restricted search
// beyond the PreferenceList type, so the two can be compared.

#ifndef SUBCHECK_ORACLE_H_
#define SUBCHECK_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subcheck/altset.h"
#include "subcheck/generate.h"
#include "subcheck/preference.h"
#include "subcheck/subtest.h"

namespace subcheck {

inline constexpr std::size_t kDefaultOracleMaxU = 12;

struct OracleViolation {
  AltSet a;
  AltSet b;
  AltSet failing;

  friend bool operator==(const OracleViolation&, const OracleViolation&) = default;
};

struct OracleVerdict {
  bool substitutable = true;
  std::vector<OracleViolation> s1_violations;
  std::vector<OracleViolation> s2_violations;
  // Every (A, B) with B subset of A, empty B included: 3^u on completion.
  std::uint64_t pairs_checked = 0;
};

// Throws UniverseTooLarge when pref's universe exceeds max_u (or 20, the
// hard limit of the mask-indexed tables).
OracleVerdict brute_force_test(const PreferenceList& pref,
                               std::size_t max_u = kDefaultOracleMaxU);

// Definitional C(X) via subset enumeration. Exponential in |X|; test use.
std::vector<AltSet> brute_force_choice(const PreferenceList& pref, const AltSet& x);

// One instance's comparison between the restricted search and the oracle.
struct DifferentialCase {
  std::uint64_t seed = 0;
  std::string label;
  bool tester_substitutable = true;
  bool oracle_substitutable = true;
  bool agree = true;
  std::string problem;  // empty when agree
};

struct DifferentialReport {
  std::size_t instances = 0;
  std::size_t agreements = 0;
  std::size_t non_substitutable = 0;
  std::vector<DifferentialCase> failures;

  bool passed() const { return failures.empty(); }
};

// Compares verdicts, per-kind presence (the oracle finds an (SK)-violation iff
// the search does) and soundness of every emitted witness.
DifferentialCase differential_check(const PreferenceList& pref,
                                    const SearchOptions& options = {});

DifferentialReport differential_run(std::span<const GenSpec> batch,
                                    const SearchOptions& options = {});
DifferentialReport differential_run(std::span<const PreferenceList> batch,
                                    const SearchOptions& options = {});

}  // namespace subcheck

#endif  // SUBCHECK_ORACLE_H_
