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

// Substitutability test for weak preferences.
//
// A relation is substitutable when, for every non-empty B subset of A,
//   (S1) each X in C(A) has X & B inside some member of C(B), and
//   (S2) each Y in C(B) contains Z & B for some Z in C(A).
//
// If either condition fails anywhere, it already fails on a pair of the form
// (X | Y, Y + x) with X, Y acceptable and x in X \ Y. The search therefore
// walks only those candidates: at most ell * (ell - 1) * u of them, each
// costing two scans of the list.
//
// Candidates are visited in a fixed order: X by position in the list (class
// rank, then canonical set order), then Y the same way, then x ascending. The
// reported witness of each kind is the first violation in that order, whatever
// the thread count.

#ifndef SUBCHECK_SUBTEST_H_
#define SUBCHECK_SUBTEST_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "subcheck/altset.h"
#include "subcheck/preference.h"

namespace subcheck {

enum class ViolationKind { kS1, kS2 };

std::string_view to_string(ViolationKind kind);

// The restricted-form triple that produced a witness: A = x_set | y_set and
// B = y_set + alternative.
struct WitnessOrigin {
  AltSet x_set;
  AltSet y_set;
  std::size_t alternative = 0;

  friend bool operator==(const WitnessOrigin&, const WitnessOrigin&) = default;
};

struct Witness {
  ViolationKind kind = ViolationKind::kS1;
  AltSet a;
  AltSet b;
  // S1: the member of C(A) whose intersection with B fits in no member of
  // C(B). S2: the member of C(B) that contains no Z & B for Z in C(A).
  AltSet failing;
  WitnessOrigin origin;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct SearchStats {
  std::uint64_t pairs_examined = 0;   // (X, Y, x) triples visited
  std::uint64_t duplicates_skipped = 0;
  std::uint64_t choice_calls = 0;
  double elapsed_ms = 0.0;
  unsigned workers = 1;
};

enum class SearchMode { kFirstWitness, kEnumerateAll };

struct SearchOptions {
  SearchMode mode = SearchMode::kFirstWitness;
  unsigned threads = 1;
  // Skip (A, B) pairs already evaluated via a different triple.
  bool deduplicate = true;
  // Per-worker choice() memo size; 0 disables it.
  std::size_t cache_capacity = 0;
};

struct Verdict {
  bool substitutable = true;
  std::optional<Witness> s1;
  std::optional<Witness> s2;
  // Every restricted-form witness in candidate order; set only by
  // SearchMode::kEnumerateAll. With deduplication each (kind, A, B) appears
  // once, carrying the earliest origin.
  std::optional<std::vector<Witness>> all_witnesses;
  SearchStats stats;
};

// First (S1)-violation in candidate order. nullopt means (S1) holds for every
// pair B subset of A. `options.mode` is ignored.
std::optional<Witness> find_s1_violation(const PreferenceList& pref,
                                         const SearchOptions& options = {});

// Same for (S2).
std::optional<Witness> find_s2_violation(const PreferenceList& pref,
                                         const SearchOptions& options = {});

// Runs both searches in one pass over the candidates.
Verdict test_substitutability(const PreferenceList& pref,
                              const SearchOptions& options = {});

// Checks the raw violation condition for (kind, A, B, failing): B is a
// non-empty subset of A, `failing` is in the right choice set and the
// condition fails for it. Recomputes C(A) and C(B).
bool verify_violation(const PreferenceList& pref, ViolationKind kind,
                      const AltSet& a, const AltSet& b, const AltSet& failing);

// verify_violation plus consistency of the origin triple.
bool verify_witness(const PreferenceList& pref, const Witness& w);

}  // namespace subcheck

#endif  // SUBCHECK_SUBTEST_H_
