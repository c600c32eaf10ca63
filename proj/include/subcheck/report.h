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

// Machine-readable result of `subcheck check`.
//
// JSON layout:
//   {
//     "substitutable": bool,
//     "s1_witness": null | witness,
//     "s2_witness": null | witness,
//     "witnesses": [witness, ...],          // only with --all
//     "stats": {"u": n, "ell": n, "s": n},
//     "input_digest": "fnv1a64:<16 hex>",   // of the canonical form
//     "mode": {"all": bool, "oracle": bool},
//     "oracle": {...},                      // only when the oracle ran
//     "timing_ms": number                   // omitted with --no-timing
//   }
//   witness := {"kind": "S1"|"S2", "A": [names], "B": [names],
//               "failing": [names], "origin": {"X": [names], "Y": [names],
//               "x": name}}
// Name arrays are sorted by name.

#ifndef SUBCHECK_REPORT_H_
#define SUBCHECK_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "subcheck/oracle.h"
#include "subcheck/preference.h"
#include "subcheck/subtest.h"

namespace subcheck {

struct WitnessRecord {
  std::string kind;
  std::vector<std::string> a;
  std::vector<std::string> b;
  std::vector<std::string> failing;
  std::vector<std::string> x_set;
  std::vector<std::string> y_set;
  std::string x;

  friend bool operator==(const WitnessRecord&, const WitnessRecord&) = default;
};

struct OracleSummary {
  bool substitutable = true;
  std::uint64_t s1_violations = 0;
  std::uint64_t s2_violations = 0;
  std::uint64_t pairs_checked = 0;
  bool agrees = true;

  friend bool operator==(const OracleSummary&, const OracleSummary&) = default;
};

struct CheckReport {
  bool substitutable = true;
  std::optional<WitnessRecord> s1_witness;
  std::optional<WitnessRecord> s2_witness;
  std::optional<std::vector<WitnessRecord>> witnesses;
  PreferenceStats stats;
  std::string input_digest;
  bool mode_all = false;
  bool mode_oracle = false;
  std::optional<OracleSummary> oracle;
  std::optional<double> timing_ms;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

WitnessRecord to_record(const Universe& universe, const Witness& w);

// "fnv1a64:" followed by 16 lowercase hex digits of the canonical form.
std::string input_digest(const PreferenceList& pref);

CheckReport make_check_report(const PreferenceList& pref, const Verdict& verdict,
                              bool mode_all);

void to_json(nlohmann::json& j, const WitnessRecord& w);
void from_json(const nlohmann::json& j, WitnessRecord& w);
void to_json(nlohmann::json& j, const CheckReport& r);
void from_json(const nlohmann::json& j, CheckReport& r);

std::string render_text(const CheckReport& r);

}  // namespace subcheck

#endif  // SUBCHECK_REPORT_H_
