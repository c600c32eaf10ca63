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

// A weak preference relation in list form: the acceptable sets arranged into
// indifference classes, best class first. The empty set is always acceptable
// and sits in the last class; every set not listed is unacceptable and ranks
// below the empty set.

#ifndef SUBCHECK_PREFERENCE_H_
#define SUBCHECK_PREFERENCE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "subcheck/altset.h"
#include "subcheck/universe.h"

namespace subcheck {

// A non-empty family of mutually indifferent sets, kept in canonical order.
class IndifferenceClass {
 public:
  // Sorts the members; throws ValidationError if empty or if a set repeats.
  explicit IndifferenceClass(std::vector<AltSet> members);

  std::span<const AltSet> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const IndifferenceClass&,
                         const IndifferenceClass&) = default;

 private:
  std::vector<AltSet> members_;
};

struct PreferenceStats {
  std::size_t u = 0;    // universe size
  std::size_t ell = 0;  // number of acceptable sets, empty set included
  std::size_t s = 0;    // largest indifference class

  friend bool operator==(const PreferenceStats&,
                         const PreferenceStats&) = default;
};

class PreferenceList {
 public:
  // Validates the weak-order invariants and throws ValidationError when one
  // fails: a set outside the universe, a set in two classes, a missing empty
  // set, or the empty set anywhere but the last class.
  PreferenceList(Universe universe, std::vector<IndifferenceClass> classes);
  PreferenceList(Universe universe, std::vector<std::vector<AltSet>> classes);

  const Universe& universe() const { return universe_; }
  std::span<const IndifferenceClass> classes() const { return classes_; }
  std::size_t num_classes() const { return classes_.size(); }
  const PreferenceStats& stats() const { return stats_; }

  // 0-based index of the class containing `s`, or nullopt if unacceptable.
  std::optional<std::size_t> class_rank(const AltSet& s) const;
  bool acceptable(const AltSet& s) const { return class_rank(s).has_value(); }

  // All acceptable sets in rank order, canonical order within a class. Class
  // k occupies [class_begin(k), class_begin(k + 1)).
  std::span<const AltSet> flat() const { return flat_; }
  std::size_t class_begin(std::size_t k) const { return offsets_[k]; }
  std::size_t rank_of_flat(std::size_t i) const { return flat_rank_[i]; }

  // Structural identity: same universe, same classes in the same order.
  friend bool operator==(const PreferenceList& a, const PreferenceList& b) {
    return a.universe_ == b.universe_ && a.classes_ == b.classes_;
  }

 private:
  void build_index();

  Universe universe_;
  std::vector<IndifferenceClass> classes_;
  PreferenceStats stats_;
  std::vector<AltSet> flat_;
  std::vector<std::size_t> flat_rank_;
  std::vector<std::size_t> offsets_;
  std::unordered_map<AltSet, std::size_t, AltSetHash> rank_;
};

}  // namespace subcheck

#endif  // SUBCHECK_PREFERENCE_H_
