// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dm/enumerate.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dm/minors.hpp"
#include "test_util.hpp"

namespace dm {
namespace {

// Frozen counts from the set-based oracle in test_util.hpp.
constexpr std::uint64_t kCounts[] = {0, 3, 15, 155, 5959};

TEST(Enumerate, SingleElementListing) {
  const auto all = enumerate_all(1);
  ASSERT_EQ(all.size(), 3U);
  EXPECT_EQ(format_family(all[0]), "{}");
  EXPECT_EQ(format_family(all[1]), "{e1}");
  EXPECT_EQ(format_family(all[2]), "{} {e1}");
}

TEST(Enumerate, CountsMatchFrozenValues) {
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(count_delta_matroids(n), kCounts[n]);
}

TEST(Enumerate, OracleAgreesUpToThree) {
  for (int n = 1; n <= 3; ++n) {
    EXPECT_EQ(testing::oracle_count(n), kCounts[n]) << n;
  }
}

TEST(Enumerate, KernelAgreesWithOracleOnFour) {
  // Every family on 4 elements through the set-based oracle is slow-ish but
  // fine; compare family by family.
  std::uint64_t valid = 0;
  for (FamilyMask mask = 1; mask < (FamilyMask{1} << 16); ++mask) {
    std::set<unsigned> family;
    for (unsigned s = 0; s < 16; ++s) {
      if (mask >> s & 1U) family.insert(s);
    }
    const bool expected = testing::oracle_is_delta_matroid(family);
    ASSERT_EQ(family_satisfies_exchange(4, mask), expected) << mask;
    valid += expected ? 1 : 0;
  }
  EXPECT_EQ(valid, kCounts[4]);
}

TEST(Enumerate, Errors) {
  EXPECT_THROW(count_delta_matroids(0), InvalidArgument);
  EXPECT_THROW(count_delta_matroids(5), InvalidArgument);
  EXPECT_THROW(verify_theorem(4, Theorem::kMinorTwistCommute), InvalidArgument);
  std::mt19937_64 rng(1);
  EXPECT_THROW(sample_delta_matroid(rng, 7), InvalidArgument);
}

TEST(Enumerate, PackRoundTrip) {
  for (const auto& d : enumerate_all(3)) {
    EXPECT_EQ(unpack_family(d.ground(), pack_family(d)), d);
  }
}

TEST(Enumerate, UpToIsomorphism) {
  EXPECT_EQ(count_delta_matroids_up_to_isomorphism(1), 3U);
  // Independent count through canonical forms of the full list.
  for (int n = 2; n <= 3; ++n) {
    std::set<std::vector<std::uint64_t>> classes;
    for (const auto& d : enumerate_all(n)) classes.insert(canonical_form(d));
    EXPECT_EQ(count_delta_matroids_up_to_isomorphism(n), classes.size());
  }
}

TEST(Theorems, Tags) {
  EXPECT_EQ(all_theorems().size(), 8U);
  for (Theorem t : all_theorems()) {
    EXPECT_EQ(parse_theorem(theorem_tag(t)), t);
    EXPECT_FALSE(theorem_description(t).empty());
  }
  EXPECT_THROW(parse_theorem("t9"), InvalidArgument);
}

TEST(Theorems, AllHoldAtThree) {
  const auto report = verify_theorems(3, all_theorems());
  EXPECT_EQ(report.valid_count, 155U);
  EXPECT_EQ(report.total_families, 255U);
  EXPECT_TRUE(report.passed());
  for (const auto& c : report.checks) {
    EXPECT_GT(c.checked, 0U) << theorem_tag(c.theorem);
    EXPECT_FALSE(c.first_counterexample.has_value());
  }
}

TEST(Theorems, JobsDoNotChangeReport) {
  const std::vector<Theorem> which = {Theorem::kTwistWidthFormula,
                                      Theorem::kExcludedMinors};
  const auto one = verify_theorems(3, which, 1);
  const auto four = verify_theorems(3, which, 4);
  ASSERT_EQ(one.checks.size(), four.checks.size());
  for (std::size_t i = 0; i < one.checks.size(); ++i) {
    EXPECT_EQ(one.checks[i].checked, four.checks[i].checked);
    EXPECT_EQ(one.checks[i].failed, four.checks[i].failed);
  }
}

TEST(Sampler, ValidDeterministicAndEmptyFeasible) {
  std::mt19937_64 a(99), b(99);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 6;
    const auto x = sample_delta_matroid(a, n);
    const auto y = sample_delta_matroid(b, n);
    EXPECT_EQ(x, y);
    EXPECT_EQ(x.size(), n);
    EXPECT_TRUE(x.is_feasible(ElementSet()));
    EXPECT_TRUE(family_satisfies_exchange(n, pack_family(x)));
  }
}

}  // namespace
}  // namespace dm
