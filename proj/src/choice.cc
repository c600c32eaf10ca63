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

#include "subcheck/choice.h"

#include "subcheck/errors.h"

namespace subcheck {

std::size_t choice_into(const PreferenceList& pref, const AltSet& x,
                        std::vector<AltSet>& out) {
  out.clear();
  const auto flat = pref.flat();
  for (std::size_t k = 0; k < pref.num_classes(); ++k) {
    const std::size_t end = pref.class_begin(k + 1);
    for (std::size_t i = pref.class_begin(k); i < end; ++i) {
      if (flat[i].is_subset_of(x)) out.push_back(flat[i]);
    }
    if (!out.empty()) return k;
  }
  // Unreachable for a valid list: the empty set is in the last class.
  throw PreconditionError("choice: preference list has no empty set");
}

ChoiceResult choice(const PreferenceList& pref, const AltSet& x) {
  ChoiceResult r;
  r.rank = choice_into(pref, x, r.chosen);
  return r;
}

bool lemma1_holds(const PreferenceList& pref, const AltSet& a, const AltSet& b) {
  if (!b.is_subset_of(a)) throw PreconditionError("lemma1_holds: B is not a subset of A");
  const ChoiceResult ca = choice(pref, a);
  std::vector<AltSet> restricted;
  for (const AltSet& s : ca.chosen) {
    if (s.is_subset_of(b)) restricted.push_back(s);
  }
  if (restricted.empty()) return true;
  return choice(pref, b).chosen == restricted;
}

const ChoiceResult& ChoiceCache::get(const PreferenceList& pref, const AltSet& x) {
  if (auto it = table_.find(x); it != table_.end()) {
    ++hits_;
    return it->second;
  }
  ++misses_;
  if (table_.size() >= capacity_) table_.clear();
  return table_.emplace(x, choice(pref, x)).first->second;
}

}  // namespace subcheck
