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

// The choice function C(X): the most preferred subsets of X.
//
// Classes are scanned best first; the first class holding any subset of X
// wins and C(X) is every member of that class contained in X. The last class
// holds the empty set, so the scan always returns something.

#ifndef SUBCHECK_CHOICE_H_
#define SUBCHECK_CHOICE_H_

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "subcheck/altset.h"
#include "subcheck/preference.h"

namespace subcheck {

struct ChoiceResult {
  std::vector<AltSet> chosen;  // canonical order, never empty
  std::size_t rank = 0;        // class shared by every chosen set

  friend bool operator==(const ChoiceResult&, const ChoiceResult&) = default;
};

ChoiceResult choice(const PreferenceList& pref, const AltSet& x);

// Allocation-free form for hot loops: overwrites `out` with C(X) and returns
// the winning class rank.
std::size_t choice_into(const PreferenceList& pref, const AltSet& x,
                        std::vector<AltSet>& out);

// Probe for the restriction property: for B subset of A, either no member of
// C(A) lies inside B, or C(B) is exactly the members of C(A) inside B.
// Throws PreconditionError unless B is a subset of A.
bool lemma1_holds(const PreferenceList& pref, const AltSet& a, const AltSet& b);

// Bounded memo for choice(). Not thread-safe; keep one per worker. When the
// table reaches capacity it is cleared wholesale.
class ChoiceCache {
 public:
  explicit ChoiceCache(std::size_t capacity) : capacity_(capacity) {}

  const ChoiceResult& get(const PreferenceList& pref, const AltSet& x);

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return table_.size(); }
  std::uint64_t hits() const { return hits_; }
  std::uint64_t misses() const { return misses_; }

 private:
  std::size_t capacity_;
  std::unordered_map<AltSet, ChoiceResult, AltSetHash> table_;
  std::uint64_t hits_ = 0;
  std::uint64_t misses_ = 0;
};

}  // namespace subcheck

#endif  // SUBCHECK_CHOICE_H_
