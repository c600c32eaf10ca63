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

#include "subcheck/preference.h"

#include <algorithm>
#include <string>

#include "subcheck/errors.h"

namespace subcheck {

IndifferenceClass::IndifferenceClass(std::vector<AltSet> members)
    : members_(std::move(members)) {
  if (members_.empty()) throw ValidationError("empty indifference class");
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw ValidationError("duplicate set within an indifference class");
  }
}

namespace {

std::vector<IndifferenceClass> to_classes(std::vector<std::vector<AltSet>> raw) {
  std::vector<IndifferenceClass> out;
  out.reserve(raw.size());
  for (auto& c : raw) out.emplace_back(std::move(c));
  return out;
}

}  // namespace

PreferenceList::PreferenceList(Universe universe,
                               std::vector<std::vector<AltSet>> classes)
    : PreferenceList(std::move(universe), to_classes(std::move(classes))) {}

PreferenceList::PreferenceList(Universe universe,
                               std::vector<IndifferenceClass> classes)
    : universe_(std::move(universe)), classes_(std::move(classes)) {
  build_index();
}

void PreferenceList::build_index() {
  if (classes_.empty()) throw ValidationError("preference list has no classes");

  stats_.u = universe_.size();
  offsets_.reserve(classes_.size() + 1);
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    offsets_.push_back(flat_.size());
    stats_.s = std::max(stats_.s, classes_[k].size());
    for (const AltSet& set : classes_[k]) {
      if (!universe_.owns(set)) {
        throw ValidationError("set outside the universe in class " +
                              std::to_string(k));
      }
      auto [it, inserted] = rank_.emplace(set, k);
      if (!inserted) {
        throw ValidationError("duplicate set " + universe_.format(set) +
                              " in classes " + std::to_string(it->second) +
                              " and " + std::to_string(k));
      }
      flat_.push_back(set);
      flat_rank_.push_back(k);
    }
  }
  offsets_.push_back(flat_.size());
  stats_.ell = flat_.size();

  auto empty_rank = class_rank(AltSet{});
  if (!empty_rank) throw ValidationError("the empty set is not listed");
  if (*empty_rank + 1 != classes_.size()) {
    throw ValidationError("the empty set must be in the last class, found in class " +
                          std::to_string(*empty_rank));
  }
}

std::optional<std::size_t> PreferenceList::class_rank(const AltSet& s) const {
  auto it = rank_.find(s);
  if (it == rank_.end()) return std::nullopt;
  return it->second;
}

}  // namespace subcheck
