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

#include "subcheck/universe.h"

#include <algorithm>
#include <cctype>

#include "subcheck/errors.h"

namespace subcheck {

bool is_valid_alternative_name(std::string_view name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxAlternatives) {
    throw ValidationError("universe has " + std::to_string(names_.size()) +
                          " alternatives; at most " +
                          std::to_string(kMaxAlternatives) + " are supported");
  }
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_valid_alternative_name(names_[i])) {
      throw ValidationError("invalid alternative name '" + names_[i] + "'");
    }
    if (!index_.emplace(names_[i], i).second) {
      throw ValidationError("duplicate alternative '" + names_[i] + "'");
    }
  }
}

std::optional<std::size_t> Universe::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

AltSet Universe::make_set(std::initializer_list<std::string_view> members) const {
  AltSet s;
  for (auto m : members) {
    auto i = index_of(m);
    if (!i) throw ValidationError("unknown alternative '" + std::string(m) + "'");
    s.insert(*i);
  }
  return s;
}

AltSet Universe::make_set(const std::vector<std::string>& members) const {
  AltSet s;
  for (const auto& m : members) {
    auto i = index_of(m);
    if (!i) throw ValidationError("unknown alternative '" + m + "'");
    s.insert(*i);
  }
  return s;
}

std::vector<std::string> Universe::member_names(const AltSet& s) const {
  std::vector<std::string> out;
  s.for_each([&](std::size_t i) { out.push_back(name(i)); });
  return out;
}

std::string Universe::format(const AltSet& s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ',';
    out += name(i);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace subcheck
