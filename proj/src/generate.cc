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

#include "subcheck/generate.h"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_set>
#include <vector>

#include "subcheck/errors.h"

namespace subcheck {

std::string_view to_string(GenFamily family) {
  switch (family) {
    case GenFamily::kUniformWeak: return "uniform-weak";
    case GenFamily::kStrict: return "strict";
    case GenFamily::kAdditiveCapacity: return "additive-capacity";
  }
  return "unknown";
}

std::optional<GenFamily> parse_family(std::string_view name) {
  if (name == "uniform-weak") return GenFamily::kUniformWeak;
  if (name == "strict") return GenFamily::kStrict;
  if (name == "additive-capacity") return GenFamily::kAdditiveCapacity;
  return std::nullopt;
}

Universe generated_universe(std::size_t u) {
  std::vector<std::string> names;
  names.reserve(u);
  for (std::size_t i = 0; i < u; ++i) {
    names.push_back(u <= 26 ? std::string(1, static_cast<char>('a' + i))
                            : "x" + std::to_string(i));
  }
  return Universe(std::move(names));
}

namespace {

constexpr std::size_t kMaxEnumeratedU = 20;

AltSet random_subset(std::mt19937_64& rng, std::size_t u) {
  AltSet s;
  for (std::size_t w = 0; w * AltSet::kWordBits < u; ++w) {
    const std::uint64_t bits = rng();
    const std::size_t lo = w * AltSet::kWordBits;
    for (std::size_t i = lo; i < std::min(u, lo + AltSet::kWordBits); ++i) {
      if ((bits >> (i - lo)) & 1U) s.insert(i);
    }
  }
  return s;
}

std::vector<AltSet> sample_distinct_sets(std::mt19937_64& rng, std::size_t u,
                                         std::size_t count) {
  // Dense requests: shuffle the full power set instead of rejecting.
  if (u <= kMaxEnumeratedU && count * 2 > (std::size_t{1} << u)) {
    std::vector<AltSet> all;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << u); ++m) {
      all.push_back(AltSet::from_mask(m));
    }
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(count);
    return all;
  }
  std::vector<AltSet> out;
  std::unordered_set<AltSet, AltSetHash> seen;
  while (out.size() < count) {
    AltSet s = random_subset(rng, u);
    if (!s.empty() && seen.insert(s).second) out.push_back(s);
  }
  return out;
}

PreferenceList uniform_weak(const GenSpec& spec, std::size_t max_class) {
  std::mt19937_64 rng(spec.seed);
  const std::vector<AltSet> sets = sample_distinct_sets(rng, spec.u, spec.target_ell);

  // Sequential assignment: close the current class with a per-instance
  // geometric break probability, or when it hits max_class.
  std::uniform_real_distribution<double> break_dist(0.2, 0.9);
  std::bernoulli_distribution close_class(break_dist(rng));
  std::vector<std::vector<AltSet>> classes;
  std::vector<AltSet> current;
  for (const AltSet& s : sets) {
    current.push_back(s);
    if (current.size() >= max_class || close_class(rng)) {
      classes.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) classes.push_back(std::move(current));
  classes.push_back({AltSet{}});
  return PreferenceList(generated_universe(spec.u), std::move(classes));
}

}  // namespace

PreferenceList additive_capacity_list(std::span<const int> utilities,
                                      std::size_t capacity) {
  const std::size_t u = utilities.size();
  if (u > kMaxEnumeratedU) {
    throw InfeasibleSpec("additive-capacity: u=" + std::to_string(u) +
                         " exceeds the enumeration limit of " +
                         std::to_string(kMaxEnumeratedU));
  }
  std::map<long, std::vector<AltSet>, std::greater<>> by_total;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << u); ++m) {
    const AltSet s = AltSet::from_mask(m);
    if (s.size() > capacity) continue;
    long total = 0;
    s.for_each([&](std::size_t i) { total += utilities[i]; });
    if (total > 0) by_total[total].push_back(s);
  }
  std::vector<std::vector<AltSet>> classes;
  for (auto& [total, sets] : by_total) classes.push_back(std::move(sets));
  classes.push_back({AltSet{}});
  return PreferenceList(generated_universe(u), std::move(classes));
}

PreferenceList generate(const GenSpec& spec) {
  if (spec.u == 0) throw InfeasibleSpec("u must be at least 1");

  if (spec.family == GenFamily::kAdditiveCapacity) {
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<int> utility(-2, 6);
    std::vector<int> utilities(spec.u);
    for (int& v : utilities) v = utility(rng);
    std::uniform_int_distribution<std::size_t> capacity(1, spec.u);
    const std::size_t q = capacity(rng);
    return additive_capacity_list(utilities, q);
  }

  if (spec.max_class == 0) throw InfeasibleSpec("max_class must be at least 1");
  if (spec.target_ell == 0) throw InfeasibleSpec("target_ell must be at least 1");
  if (spec.u < 64 && spec.target_ell > (std::uint64_t{1} << spec.u) - 1) {
    throw InfeasibleSpec("target_ell=" + std::to_string(spec.target_ell) +
                         " exceeds the " +
                         std::to_string((std::uint64_t{1} << spec.u) - 1) +
                         " non-empty subsets of a universe of size " +
                         std::to_string(spec.u));
  }
  if (spec.u > kMaxAlternatives) {
    throw InfeasibleSpec("u exceeds " + std::to_string(kMaxAlternatives));
  }
  const std::size_t max_class = spec.family == GenFamily::kStrict ? 1 : spec.max_class;
  return uniform_weak(spec, max_class);
}

}  // namespace subcheck
