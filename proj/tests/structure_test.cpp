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

#include "dm/structure.hpp"

#include <gtest/gtest.h>

#include "dm/enumerate.hpp"
#include "dm/minors.hpp"
#include "test_util.hpp"

namespace dm {
namespace {

using testing::make;
using testing::oracle_min_twist_width;
using testing::oracle_twist_width;
using testing::set_of;

TEST(TwistWidthFormula, Examples) {
  const auto d1 = catalog()[0];
  const Decomposition dec = decompose(d1, ElementSet(1));
  EXPECT_EQ(dec.width_inside.value, 1);
  EXPECT_EQ(dec.width_outside.value, 1);
  EXPECT_EQ(dec.connectivity_min, 0);
  EXPECT_EQ(twist_width_formula(d1, ElementSet(1)), 2);
  const auto d3 = catalog()[2];
  EXPECT_EQ(twist_width_formula(d3, ElementSet(1)), 2);
  EXPECT_EQ(twist_width_formula(d3, ElementSet(1)),
            width(twist(d3, ElementSet(1))).value);
  for (const auto& d : catalog()) {
    EXPECT_EQ(twist_width_formula(d, ElementSet()), width(d).value);
  }
  EXPECT_THROW(twist_width_formula(d1, ElementSet(4)), InvalidArgument);
}

TEST(TwistMatroidWitness, Examples) {
  const auto m = make("a b", {"a", "b"});
  EXPECT_TRUE(is_twist_matroid_witness(m, ElementSet()));
  EXPECT_FALSE(is_twist_matroid_witness(catalog()[0], ElementSet(1)));
  // Twisting {∅,{a}} by {a} gives {{a},∅} again: not a matroid.
  const auto d = make("a b", {"", "a"});
  EXPECT_FALSE(is_twist_matroid_witness(d, set_of(d, "a")));
  EXPECT_FALSE(is_matroid(twist(d, set_of(d, "a"))));
}

TEST(TwistWidthOneWitness, Examples) {
  EXPECT_TRUE(is_twist_width_one_witness(make("a", {"", "a"}), ElementSet()));
  for (std::uint64_t a = 0; a < 4; ++a) {
    EXPECT_FALSE(is_twist_width_one_witness(catalog()[0], ElementSet(a)));
  }
  const auto d = make("a b", {"", "a"});
  EXPECT_TRUE(is_twist_width_one_witness(d, set_of(d, "b")));
}

TEST(MinWidthTwist, Examples) {
  EXPECT_EQ(min_width_twist(catalog()[2]).width.value, 2);
  const auto m = make("a b c", {"a b", "a c"});
  EXPECT_EQ(min_width_twist(m), (TwistChoice{ElementSet(), Width{0}}));
  const auto d = make("a b", {"", "a"});
  EXPECT_EQ(min_width_twist(d), (TwistChoice{ElementSet(), Width{1}}));
  EXPECT_EQ(min_width_twist(catalog()[2], true).width.value, 2);
}

TEST(MinWidthTwist, TooLarge) {
  std::vector<std::string> labels;
  for (int i = 0; i < 25; ++i) labels.push_back("x" + std::to_string(i));
  const auto big = DeltaMatroid::validate(GroundSet(labels), {ElementSet()});
  EXPECT_THROW(min_width_twist(big), InvalidArgument);
}

TEST(RoughStructure, Examples) {
  EXPECT_TRUE(rough_structure_witnesses(catalog()[0]).empty());
  const auto w = rough_structure_witnesses(make("a", {"", "a"}));
  ASSERT_FALSE(w.empty());
  EXPECT_EQ(w.front(), ElementSet());
}

// Formula, both witness tests and the min search against direct twisting,
// exhaustive through n = 3 (n = 4 is in the acceptance suite).
TEST(Structure, AgreesWithDirectTwists) {
  for (int n = 1; n <= 3; ++n) {
    for_each_delta_matroid(n, [&](const DeltaMatroid& d) {
      bool any_one = false;
      for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits) {
        const ElementSet a(bits);
        const int w = oracle_twist_width(d, a);
        EXPECT_EQ(twist_width_formula(d, a), w);
        EXPECT_EQ(is_twist_matroid_witness(d, a), w == 0);
        EXPECT_EQ(is_twist_width_one_witness(d, a), w == 1);
        any_one = any_one || w == 1;
      }
      EXPECT_EQ(!rough_structure_witnesses(d).empty(), any_one);
      const TwistChoice best = min_width_twist(d, true);
      EXPECT_EQ(best.width.value, oracle_min_twist_width(d));
      EXPECT_EQ(best, min_width_twist_direct(d));
    });
  }
}

}  // namespace
}  // namespace dm
