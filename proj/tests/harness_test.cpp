// Copyright 2026 The padicmin Authors
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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "padicmin/harness.hpp"

namespace padicmin {
namespace {

FamilySpec family(std::uint64_t p, unsigned degree, std::uint64_t modulus) {
  FamilySpec s;
  s.p = Prime(p);
  s.max_degree = degree;
  s.coeff_modulus = modulus;
  return s;
}

TEST(FamilySpec, SizeAndMembers) {
  const FamilySpec s = family(5, 3, 25);
  EXPECT_EQ(s.size(), 15625u);
  EXPECT_EQ(s.member(0), IntPoly({1}));
  EXPECT_EQ(s.member(1), IntPoly({1, 0, 0, 1}));
  EXPECT_EQ(s.member(25 * 25), IntPoly({1, 1}));
  EXPECT_EQ(FamilySpec::default_modulus(Prime(2)), 8u);
  EXPECT_EQ(FamilySpec::default_modulus(Prime(3)), 27u);
  EXPECT_EQ(FamilySpec::default_modulus(Prime(5)), 25u);
}

TEST(FamilySpec, Guards) {
  EXPECT_THROW(family(5, 9, 25).size(), FamilyTooLarge);
  EXPECT_THROW(family(5, 0, 25).size(), InvalidArgument);
  FamilySpec small = family(5, 2, 25);
  small.cap = 100;
  EXPECT_THROW(small.size(), FamilyTooLarge);
  EXPECT_THROW(cross_validate(family(5, 0, 25)), InvalidArgument);
  EXPECT_THROW(cross_validate(family(7, 1, 49)), UnsupportedPrime);
}

TEST(CrossValidate, LinearMapsModulo25) {
  const CrossValReport r = cross_validate(family(5, 1, 25));
  EXPECT_EQ(r.total, 25u);
  EXPECT_EQ(r.minimal_count, 5u);
  EXPECT_TRUE(r.mismatches.empty());
  EXPECT_EQ(find_minimal(family(5, 1, 25), 10),
            (std::vector<IntPoly>{IntPoly({1, 1}), IntPoly({1, 6}),
                                  IntPoly({1, 11}), IntPoly({1, 16}),
                                  IntPoly({1, 21})}));
}

TEST(CrossValidate, QuadraticsModulo8) {
  const CrossValReport r = cross_validate(family(2, 2, 8));
  EXPECT_EQ(r.total, 64u);
  EXPECT_TRUE(r.mismatches.empty());
  std::uint64_t expected = 0;
  for (std::uint64_t k = 0; k < 64; ++k) {
    expected += testing::brute_full_cycle(family(2, 2, 8).member(k), 8);
  }
  EXPECT_EQ(r.minimal_count, expected);
}

TEST(CrossValidate, P3ScoresBothReadings) {
  const CrossValReport r = cross_validate(family(3, 2, 27));
  ASSERT_TRUE(r.p3_scores);
  EXPECT_EQ(r.p3_scores->first, 0u);
  EXPECT_EQ(r.p3_scores->second, 0u);
  EXPECT_EQ(r.p3_reading, A0Reading::AsA2);
}

TEST(CrossValidate, P3DegreeSevenSeparatesReadings) {
  FamilySpec s = family(3, 7, 27);
  s.sample = SampleMode{20000, 5};
  const CrossValReport r = cross_validate(s);
  ASSERT_TRUE(r.p3_scores);
  EXPECT_EQ(r.p3_scores->first, 0u);
  EXPECT_GT(r.p3_scores->second, 0u);
  EXPECT_EQ(r.p3_reading, A0Reading::AsA2);
  EXPECT_TRUE(r.mismatches.empty());
}

TEST(CrossValidate, DeterministicAcrossWorkerCounts) {
  FamilySpec s = family(3, 6, 27);
  s.sample = SampleMode{30000, 99};
  const CrossValReport one = cross_validate(s, 1);
  const CrossValReport many = cross_validate(s, 7);
  EXPECT_EQ(one.total, many.total);
  EXPECT_EQ(one.minimal_count, many.minimal_count);
  EXPECT_EQ(one.p3_scores, many.p3_scores);

  const CrossValReport ex1 = cross_validate(family(5, 3, 25), 1);
  const CrossValReport ex8 = cross_validate(family(5, 3, 25), 8);
  EXPECT_EQ(ex1.minimal_count, ex8.minimal_count);
  EXPECT_EQ(find_minimal(family(5, 3, 25), 40, 1),
            find_minimal(family(5, 3, 25), 40, 8));
}

TEST(CrossValidate, MismatchListIsSortedAndReplayable) {
  // Under the A0 = a_6 + ... reading, degree-7 members disagree with the
  // oracle; every listed disagreement must reproduce.
  FamilySpec s = family(3, 7, 27);
  s.sample = SampleMode{4000, 3};
  const CrossValReport r = cross_validate(s, 3);
  ASSERT_TRUE(r.p3_scores);
  // The chosen reading is exact, so force the other one directly.
  std::vector<IntPoly> bad;
  for (std::uint64_t k = 0; k < 4000; ++k) {
    auto digits = sample_coefficients(3, k, 7, 0, 26);
    std::vector<BigInt> c{BigInt(1)};
    for (auto d : digits) c.emplace_back(d);
    const IntPoly f(c);
    const bool oracle = oracle_minimal(f, Prime(3));
    const bool closed = check_p3(f, A0Reading::AsMult6Sum).verdict == Verdict::Minimal;
    if (oracle != closed) bad.push_back(f);
  }
  EXPECT_EQ(bad.size(), r.p3_scores->second);
  for (std::size_t i = 1; i < r.mismatches.size(); ++i) {
    EXPECT_LT(r.mismatches[i - 1].poly, r.mismatches[i].poly);
  }
}

TEST(CrossValidate, ShiftedRepresentativesGiveSameCount) {
  FamilySpec base = family(5, 2, 25);
  FamilySpec shifted = base;
  shifted.coeff_origin = -12;
  EXPECT_EQ(cross_validate(base).minimal_count,
            cross_validate(shifted).minimal_count);

  FamilySpec b2 = family(2, 3, 8);
  FamilySpec s2 = b2;
  s2.coeff_origin = -4;
  EXPECT_EQ(cross_validate(b2).minimal_count, cross_validate(s2).minimal_count);
}

TEST(CrossValidate, NonUnitConstantTerm) {
  FamilySpec s = family(5, 2, 25);
  s.constant_term = 10;
  const CrossValReport r = cross_validate(s);
  EXPECT_EQ(r.minimal_count, 0u);
  EXPECT_TRUE(r.mismatches.empty());

  s.constant_term = 3;
  const CrossValReport conj = cross_validate(s);
  EXPECT_TRUE(conj.mismatches.empty());
  EXPECT_GT(conj.minimal_count, 0u);
}

TEST(FindMinimal, Examples) {
  EXPECT_EQ(find_minimal(family(5, 1, 25), 1), std::vector<IntPoly>{IntPoly({1, 1})});
  EXPECT_EQ(find_minimal(family(2, 2, 8), 1), std::vector<IntPoly>{IntPoly({1, 1})});
  EXPECT_TRUE(find_minimal(family(5, 1, 25), 0).empty());

  // The single member 1 + 5x.
  FamilySpec zero_slope = family(5, 1, 1);
  zero_slope.coeff_origin = 5;
  EXPECT_TRUE(find_minimal(zero_slope, 5).empty());
  EXPECT_THROW(find_minimal(family(5, 9, 25), 1), FamilyTooLarge);
}

TEST(FindMinimal, OrderMatchesSequentialScan) {
  const FamilySpec s = family(5, 3, 25);
  std::vector<IntPoly> expected;
  for (std::uint64_t k = 0; k < s.size() && expected.size() < 7; ++k) {
    if (testing::brute_full_cycle(s.member(k), 25)) expected.push_back(s.member(k));
  }
  EXPECT_EQ(find_minimal(s, 7, 4), expected);
}

TEST(IdentitySuite, AllPropertiesHold) {
  const IdentitySuiteReport five = identity_suite(Prime(5), 2000, 42);
  EXPECT_TRUE(five.passed());
  ASSERT_EQ(five.properties.size(), 5u);
  EXPECT_EQ(five.properties[0].name, "derivative product identity");
  // Only maps with a full cycle mod 5 meet the identity's premise.
  EXPECT_GT(five.properties[0].checked, 10u);
  EXPECT_LT(five.properties[0].checked, 2000u);
  EXPECT_GT(five.properties[3].checked, 0u);  // lift equivalence exercised

  const IdentitySuiteReport two = identity_suite(Prime(2), 1000, 7);
  EXPECT_TRUE(two.passed());
  EXPECT_EQ(two.properties.size(), 4u);

  const IdentitySuiteReport none = identity_suite(Prime(5), 0, 1);
  EXPECT_TRUE(none.passed());
  for (const auto& p : none.properties) EXPECT_EQ(p.checked, 0u);
}

TEST(SampleCoefficients, DependsOnlyOnSeedAndIndex) {
  EXPECT_EQ(sample_coefficients(1, 5, 8, -100, 100),
            sample_coefficients(1, 5, 8, -100, 100));
  EXPECT_NE(sample_coefficients(1, 5, 8, -100, 100),
            sample_coefficients(1, 6, 8, -100, 100));
  for (auto c : sample_coefficients(3, 0, 1000, -2, 2)) {
    EXPECT_GE(c, -2);
    EXPECT_LE(c, 2);
  }
}

}  // namespace
}  // namespace padicmin
