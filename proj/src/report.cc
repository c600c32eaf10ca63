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

#include "subcheck/report.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "subcheck/parse.h"

namespace subcheck {

using nlohmann::json;

namespace {

std::vector<std::string> sorted_names(const Universe& universe, const AltSet& s) {
  std::vector<std::string> names = universe.member_names(s);
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace

WitnessRecord to_record(const Universe& universe, const Witness& w) {
  return WitnessRecord{std::string(to_string(w.kind)),
                       sorted_names(universe, w.a),
                       sorted_names(universe, w.b),
                       sorted_names(universe, w.failing),
                       sorted_names(universe, w.origin.x_set),
                       sorted_names(universe, w.origin.y_set),
                       universe.name(w.origin.alternative)};
}

std::string input_digest(const PreferenceList& pref) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_form(pref)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

CheckReport make_check_report(const PreferenceList& pref, const Verdict& verdict,
                              bool mode_all) {
  const Universe& universe = pref.universe();
  CheckReport r;
  r.substitutable = verdict.substitutable;
  if (verdict.s1) r.s1_witness = to_record(universe, *verdict.s1);
  if (verdict.s2) r.s2_witness = to_record(universe, *verdict.s2);
  if (mode_all && verdict.all_witnesses) {
    std::vector<WitnessRecord> all;
    all.reserve(verdict.all_witnesses->size());
    for (const Witness& w : *verdict.all_witnesses) all.push_back(to_record(universe, w));
    r.witnesses = std::move(all);
  }
  r.stats = pref.stats();
  r.input_digest = input_digest(pref);
  r.mode_all = mode_all;
  r.timing_ms = verdict.stats.elapsed_ms;
  return r;
}

void to_json(json& j, const WitnessRecord& w) {
  j = json{{"kind", w.kind},
           {"A", w.a},
           {"B", w.b},
           {"failing", w.failing},
           {"origin", {{"X", w.x_set}, {"Y", w.y_set}, {"x", w.x}}}};
}

void from_json(const json& j, WitnessRecord& w) {
  j.at("kind").get_to(w.kind);
  j.at("A").get_to(w.a);
  j.at("B").get_to(w.b);
  j.at("failing").get_to(w.failing);
  const json& origin = j.at("origin");
  origin.at("X").get_to(w.x_set);
  origin.at("Y").get_to(w.y_set);
  origin.at("x").get_to(w.x);
}

void to_json(json& j, const CheckReport& r) {
  auto witness_or_null = [](const std::optional<WitnessRecord>& w) {
    return w ? json(*w) : json(nullptr);
  };
  j = json::object();
  j["substitutable"] = r.substitutable;
  j["s1_witness"] = witness_or_null(r.s1_witness);
  j["s2_witness"] = witness_or_null(r.s2_witness);
  if (r.witnesses) j["witnesses"] = *r.witnesses;
  j["stats"] = {{"u", r.stats.u}, {"ell", r.stats.ell}, {"s", r.stats.s}};
  j["input_digest"] = r.input_digest;
  j["mode"] = {{"all", r.mode_all}, {"oracle", r.mode_oracle}};
  if (r.oracle) {
    j["oracle"] = {{"substitutable", r.oracle->substitutable},
                   {"s1_violations", r.oracle->s1_violations},
                   {"s2_violations", r.oracle->s2_violations},
                   {"pairs_checked", r.oracle->pairs_checked},
                   {"agrees", r.oracle->agrees}};
  }
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
}

void from_json(const json& j, CheckReport& r) {
  auto witness = [&](const char* key) -> std::optional<WitnessRecord> {
    const json& v = j.at(key);
    if (v.is_null()) return std::nullopt;
    return v.get<WitnessRecord>();
  };
  r = CheckReport{};
  j.at("substitutable").get_to(r.substitutable);
  r.s1_witness = witness("s1_witness");
  r.s2_witness = witness("s2_witness");
  if (j.contains("witnesses")) r.witnesses = j.at("witnesses").get<std::vector<WitnessRecord>>();
  const json& stats = j.at("stats");
  stats.at("u").get_to(r.stats.u);
  stats.at("ell").get_to(r.stats.ell);
  stats.at("s").get_to(r.stats.s);
  j.at("input_digest").get_to(r.input_digest);
  j.at("mode").at("all").get_to(r.mode_all);
  j.at("mode").at("oracle").get_to(r.mode_oracle);
  if (j.contains("oracle")) {
    const json& o = j.at("oracle");
    OracleSummary s;
    o.at("substitutable").get_to(s.substitutable);
    o.at("s1_violations").get_to(s.s1_violations);
    o.at("s2_violations").get_to(s.s2_violations);
    o.at("pairs_checked").get_to(s.pairs_checked);
    o.at("agrees").get_to(s.agrees);
    r.oracle = s;
  }
  if (j.contains("timing_ms")) r.timing_ms = j.at("timing_ms").get<double>();
}

namespace {

std::string braces(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += ',';
    out += names[i];
  }
  return out + "}";
}

void write_witness(std::ostream& os, const WitnessRecord& w, const char* indent) {
  os << indent << "A = " << braces(w.a) << "\n"
     << indent << "B = " << braces(w.b) << "\n"
     << indent << "failing = " << braces(w.failing) << "\n"
     << indent << "origin: X = " << braces(w.x_set) << ", Y = " << braces(w.y_set)
     << ", x = " << w.x << "\n";
}

}  // namespace

std::string render_text(const CheckReport& r) {
  std::ostringstream os;
  os << "substitutable: " << (r.substitutable ? "yes" : "no") << "\n";
  os << "stats: u=" << r.stats.u << " ell=" << r.stats.ell << " s=" << r.stats.s << "\n";
  for (const auto* w : {&r.s1_witness, &r.s2_witness}) {
    const char* kind = w == &r.s1_witness ? "S1" : "S2";
    if (!*w) {
      os << kind << ": holds\n";
    } else {
      os << kind << ": violated\n";
      write_witness(os, **w, "  ");
    }
  }
  if (r.witnesses) {
    os << "witnesses: " << r.witnesses->size() << "\n";
    for (const WitnessRecord& w : *r.witnesses) {
      os << "  " << w.kind << " A=" << braces(w.a) << " B=" << braces(w.b)
         << " failing=" << braces(w.failing) << " origin X=" << braces(w.x_set)
         << " Y=" << braces(w.y_set) << " x=" << w.x << "\n";
    }
  }
  if (r.oracle) {
    os << "oracle: " << (r.oracle->agrees ? "agrees" : "DISAGREES")
       << " (substitutable: " << (r.oracle->substitutable ? "yes" : "no")
       << ", S1 violations: " << r.oracle->s1_violations
       << ", S2 violations: " << r.oracle->s2_violations
       << ", pairs: " << r.oracle->pairs_checked << ")\n";
  }
  os << "digest: " << r.input_digest << "\n";
  if (r.timing_ms) os << "time: " << *r.timing_ms << " ms\n";
  return os.str();
}

}  // namespace subcheck
