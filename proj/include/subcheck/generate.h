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

// Seeded random preference lists for differential tests and benchmarks.

#ifndef SUBCHECK_GENERATE_H_
#define SUBCHECK_GENERATE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "subcheck/preference.h"

namespace subcheck {

enum class GenFamily {
  // target_ell distinct non-empty sets, split into random classes of at most
  // max_class sets.
  kUniformWeak,
  // As kUniformWeak with max_class forced to 1.
  kStrict,
  // Random integer utilities and a capacity q. Acceptable sets are those of
  // size <= q with positive total; equal totals are indifferent. target_ell
  // and max_class do not apply.
  kAdditiveCapacity,
};

std::string_view to_string(GenFamily family);
std::optional<GenFamily> parse_family(std::string_view name);

struct GenSpec {
  std::uint64_t seed = 0;
  std::size_t u = 4;
  std::size_t target_ell = 6;  // non-empty acceptable sets; {} is extra
  std::size_t max_class = 3;
  GenFamily family = GenFamily::kUniformWeak;
};

// Alternative names used by generated lists: a..z for u <= 26, else x0, x1...
Universe generated_universe(std::size_t u);

// Deterministic in the spec. Throws InfeasibleSpec for u == 0, max_class == 0,
// target_ell == 0, or target_ell above 2^u - 1.
PreferenceList generate(const GenSpec& spec);

// The additive-capacity construction for given utilities. Throws
// InfeasibleSpec if the universe is too large to enumerate (u > 20).
PreferenceList additive_capacity_list(std::span<const int> utilities,
                                      std::size_t capacity);

}  // namespace subcheck

#endif  // SUBCHECK_GENERATE_H_
