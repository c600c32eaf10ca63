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

#include "subcheck/oracle.h"

#include <algorithm>
#include <iostream>

#include "gtest/gtest.h"
#include "subcheck/errors.h"
#include "subcheck/generate.h"
#include "subcheck/parse.h"
#include "test_util.h"

namespace subcheck {
namespace {

using testing::golden_list;

std::uint64_t pow3(std::size_t n) {
  std::uint64_t r = 1;
  while (n-- > 0) r *= 3;
  return r;
}

TEST(BruteForceTest, GoldenList) {
  const PreferenceList pref = golden_list();
  const Universe& u = pref.universe();
  const OracleVerdict v = brute_force_test(pref);
  EXPECT_FALSE(v.substitutable);
  const OracleViolation expected{u.full(), u.make_set({"a", "b", "c"}), u.make_set({"a", "c"})};
  EXPECT_NE(std::find(v.s2_violations.begin(), v.s2_violations.end(), expected),
            v.s2_violations.end());
  const OracleViolation s1{u.make_set({"a", "b"}), u.make_set({"a"}), u.make_set({"a", "b"})};
  EXPECT_NE(std::find(v.s1_violations.begin(), v.s1_violations.end(), s1),
            v.s1_violations.end());
  EXPECT_EQ(v.s1_violations.size(), 40u);
  EXPECT_EQ(v.s2_violations.size(), 27u);
  EXPECT_EQ(v.pairs_checked, pow3(4));
}

TEST(BruteForceTest, OnlyEmptySet) {
  const OracleVerdict v = brute_force_test(parse_preference_list("universe: a, b\n{}"));
  EXPECT_TRUE(v.substitutable);
  EXPECT_TRUE(v.s1_violations.empty());
  EXPECT_TRUE(v.s2_violations.empty());
  EXPECT_EQ(v.pairs_checked, 9u);
}

// Enumerated by hand: C({})=C({a})={{}}, C({b})={{b}}, C({a,b})={{a,b}}. Only
// A={a,b}, B={a} fails, and it fails both conditions.
TEST(BruteForceTest, SmallRelationHandEnumerated) {
  const PreferenceList pref = parse_preference_list("{a,b} / {b} / {}");
  const Universe& u = pref.universe();
  const OracleVerdict v = brute_force_test(pref);
  const AltSet ab = u.make_set({"a", "b"});
  const AltSet a = u.make_set({"a"});
  EXPECT_EQ(v.s1_violations, (std::vector<OracleViolation>{{ab, a, ab}}));
  EXPECT_EQ(v.s2_violations, (std::vector<OracleViolation>{{ab, a, AltSet{}}}));
  EXPECT_EQ(v.pairs_checked, 9u);
}

TEST(BruteForceTest, PairCountIsThreeToTheU) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const PreferenceList pref = testing::random_small_list(seed, 7, 20);
    EXPECT_EQ(brute_force_test(pref).pairs_checked, pow3(pref.universe().size()));
  }
}

TEST(BruteForceTest, ViolationsSatisfyDefinition) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const PreferenceList pref = testing::random_small_list(seed, 5, 12);
    const OracleVerdict v = brute_force_test(pref);
    EXPECT_EQ(v.substitutable, v.s1_violations.empty() && v.s2_violations.empty());
    for (const auto& x : v.s1_violations)
      ASSERT_TRUE(verify_violation(pref, ViolationKind::kS1, x.a, x.b, x.failing));
    for (const auto& x : v.s2_violations)
      ASSERT_TRUE(verify_violation(pref, ViolationKind::kS2, x.a, x.b, x.failing));
  }
}

TEST(BruteForceTest, UniverseCap) {
  const PreferenceList pref = generate({1, 13, 5, 2, GenFamily::kUniformWeak});
  EXPECT_THROW(brute_force_test(pref), UniverseTooLarge);
  EXPECT_THROW(brute_force_test(golden_list(), 3), UniverseTooLarge);
}

TEST(GenerateTest, UniformWeakExample) {
  const PreferenceList pref = generate({7, 4, 6, 3, GenFamily::kUniformWeak});
  EXPECT_EQ(pref.stats().u, 4u);
  EXPECT_EQ(pref.stats().ell, 7u);
  EXPECT_LE(pref.stats().s, 3u);
  EXPECT_EQ(pref.classes().back().size(), 1u);
  EXPECT_TRUE(pref.classes().back().members()[0].empty());
}

TEST(GenerateTest, StrictFamilyHasSingletonClasses) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const PreferenceList pref = generate({seed, 5, 12, 4, GenFamily::kStrict});
    EXPECT_EQ(pref.stats().s, 1u);
    EXPECT_EQ(pref.stats().ell, 13u);
  }
}

TEST(GenerateTest, SeedDeterminism) {
  for (GenFamily f : {GenFamily::kUniformWeak, GenFamily::kStrict, GenFamily::kAdditiveCapacity}) {
    const GenSpec spec{42, 6, 20, 3, f};
    EXPECT_EQ(generate(spec), generate(spec));
    EXPECT_EQ(canonical_form(generate(spec)), canonical_form(generate(spec)));
  }
  EXPECT_NE(generate({1, 6, 20, 3, GenFamily::kUniformWeak}),
            generate({2, 6, 20, 3, GenFamily::kUniformWeak}));
}

TEST(GenerateTest, DenseAndWideRequests) {
  const PreferenceList full = generate({3, 4, 15, 2, GenFamily::kUniformWeak});
  EXPECT_EQ(full.stats().ell, 16u);
  const PreferenceList wide = generate({3, 100, 30, 2, GenFamily::kUniformWeak});
  EXPECT_EQ(wide.stats().u, 100u);
  EXPECT_EQ(wide.universe().name(99), "x99");
}

TEST(GenerateTest, InfeasibleSpecs) {
  EXPECT_THROW(generate({1, 3, 8, 2, GenFamily::kUniformWeak}), InfeasibleSpec);
  EXPECT_THROW(generate({1, 0, 1, 2, GenFamily::kUniformWeak}), InfeasibleSpec);
  EXPECT_THROW(generate({1, 3, 0, 2, GenFamily::kUniformWeak}), InfeasibleSpec);
  EXPECT_THROW(generate({1, 3, 2, 0, GenFamily::kUniformWeak}), InfeasibleSpec);
  EXPECT_THROW(generate({1, 21, 2, 1, GenFamily::kAdditiveCapacity}), InfeasibleSpec);
}

// Equal utilities 1 and q = 2: every pair totals 2, every singleton 1.
TEST(GenerateTest, AdditiveCapacityEqualUtilities) {
  const std::vector<int> utilities{1, 1, 1, 1};
  const PreferenceList pref = additive_capacity_list(utilities, 2);
  ASSERT_EQ(pref.num_classes(), 3u);
  EXPECT_EQ(pref.classes()[0].size(), 6u);
  for (const AltSet& s : pref.classes()[0]) EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(pref.classes()[1].size(), 4u);
  for (const AltSet& s : pref.classes()[1]) EXPECT_EQ(s.size(), 1u);
  EXPECT_EQ(pref.classes()[2].members()[0], AltSet{});
}

TEST(GenerateTest, AdditiveCapacityDropsNonPositiveTotals) {
  const std::vector<int> utilities{3, -1, 0};
  const PreferenceList pref = additive_capacity_list(utilities, 3);
  const Universe& u = pref.universe();
  EXPECT_EQ(pref.class_rank(u.make_set({"a"})), pref.class_rank(u.make_set({"a", "c"})));
  EXPECT_FALSE(pref.acceptable(u.make_set({"b"})));
  EXPECT_FALSE(pref.acceptable(u.make_set({"c"})));
  EXPECT_LT(*pref.class_rank(u.make_set({"a"})), *pref.class_rank(u.make_set({"a", "b"})));
}

TEST(DifferentialTest, UniformWeakBatch) {
  std::vector<GenSpec> batch;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    batch.push_back({seed, 5, 1 + seed % 14, 1 + seed % 4, GenFamily::kUniformWeak});
  }
  const DifferentialReport r = differential_run(batch);
  for (const auto& f : r.failures) ADD_FAILURE() << f.label << " seed " << f.seed << ": " << f.problem;
  EXPECT_EQ(r.agreements, batch.size());
}

TEST(DifferentialTest, StrictBatch) {
  std::vector<GenSpec> batch;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    batch.push_back({seed, 5, 1 + seed % 14, 1, GenFamily::kStrict});
  }
  EXPECT_TRUE(differential_run(batch).passed());
}

TEST(DifferentialTest, BatchWithGoldenList) {
  const std::vector<PreferenceList> batch{golden_list(), parse_preference_list("{}"),
                                          parse_preference_list("{a,b} / {a} / {b} / {}")};
  const DifferentialReport r = differential_run(batch);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.non_substitutable, 1u);
  EXPECT_FALSE(differential_check(golden_list()).tester_substitutable);
  EXPECT_FALSE(differential_check(golden_list()).oracle_substitutable);
}

// The additive family is measured, not assumed substitutable.
TEST(DifferentialTest, AdditiveCapacityFamily) {
  std::vector<GenSpec> batch;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    batch.push_back({seed, 2 + seed % 5, 1, 1, GenFamily::kAdditiveCapacity});
  }
  const DifferentialReport r = differential_run(batch);
  EXPECT_TRUE(r.passed());
  std::cout << "additive-capacity: " << r.instances - r.non_substitutable << "/" << r.instances
            << " substitutable\n";
}

}  // namespace
}  // namespace subcheck
