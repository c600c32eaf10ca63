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

#ifndef SUBCHECK_UNIVERSE_H_
#define SUBCHECK_UNIVERSE_H_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "subcheck/altset.h"

namespace subcheck {

// True iff `name` matches [A-Za-z0-9_]+.
bool is_valid_alternative_name(std::string_view name);

// The finite set of alternatives. Index i <-> names()[i] for the lifetime of
// the object.
class Universe {
 public:
  Universe() = default;

  // Throws ValidationError on an invalid or repeated name, or when there are
  // more than kMaxAlternatives names.
  explicit Universe(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  AltSet full() const { return AltSet::first_n(size()); }

  // Builds a set from names; throws ValidationError on an unknown name.
  AltSet make_set(std::initializer_list<std::string_view> members) const;
  AltSet make_set(const std::vector<std::string>& members) const;

  // True iff no member lies outside this universe.
  bool owns(const AltSet& s) const { return s.span_width() <= size(); }

  // Member names in index order.
  std::vector<std::string> member_names(const AltSet& s) const;

  // "{a,b,d}"
  std::string format(const AltSet& s) const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace subcheck

#endif  // SUBCHECK_UNIVERSE_H_
