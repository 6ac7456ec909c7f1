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

#include "dm/matroid.hpp"

#include <gtest/gtest.h>

#include "dm/enumerate.hpp"
#include "dm/minors.hpp"
#include "test_util.hpp"

namespace dm {
namespace {

using testing::make;
using testing::set_of;

TEST(Matroid, Recognition) {
  EXPECT_FALSE(is_matroid(catalog()[2]));
  EXPECT_TRUE(is_matroid(make("a b", {"a", "b"})));
  EXPECT_THROW(Matroid{catalog()[0]}, InvalidArgument);
  const Matroid m(make("a b c", {"a b", "a c"}));
  EXPECT_EQ(m.rank(), 2);
}

TEST(Matroid, DMin) {
  const auto d5 = catalog()[4];
  EXPECT_EQ(format_family(d_min(d5).delta()), "{}");
  const auto m = make("a b", {"a", "b"});
  EXPECT_EQ(d_min(m).delta(), m);
  EXPECT_EQ(format_family(d_min(make("a b", {"a", "a b"})).delta()), "{a}");
}

TEST(Matroid, RankNullity) {
  const Matroid m3 = d_min(catalog()[2]);
  EXPECT_EQ(rank(m3, set_of(m3.delta(), "a b")), 0);
  EXPECT_EQ(nullity(m3, set_of(m3.delta(), "a b")), 2);
  const Matroid u(make("a b c", {"a b", "a c", "b c"}));
  EXPECT_EQ(rank(u, ElementSet()), 0);
  EXPECT_EQ(rank(u, u.ground().full()), 2);
  EXPECT_EQ(nullity(u, u.ground().full()), 1);
  EXPECT_EQ(nullity(u, ElementSet()), 0);
  EXPECT_THROW(rank(u, ElementSet(8)), InvalidArgument);
}

TEST(Matroid, Connectivity) {
  const Matroid m(make("a b", {"a", "b"}));
  EXPECT_EQ(connectivity(m, ElementSet(1)), 1);
  EXPECT_FALSE(is_separator(m, ElementSet(1)));
  EXPECT_TRUE(is_separator(m, ElementSet()));
  EXPECT_TRUE(is_separator(m, m.ground().full()));
  const Matroid loops = d_min(catalog()[3]);
  for (std::uint64_t a = 0; a < 8; ++a) {
    EXPECT_EQ(connectivity(loops, ElementSet(a)), 0);
  }
  EXPECT_THROW(connectivity(m, ElementSet(4)), InvalidArgument);
}

// Properties on every matroid arising as D_min for n <= 4.
TEST(Matroid, PropertiesExhaustive) {
  for (int n = 1; n <= 4; ++n) {
    const ElementSet full = ElementSet::full(n);
    for_each_delta_matroid(n, [&](const DeltaMatroid& d) {
      const Matroid m = d_min(d);
      EXPECT_TRUE(is_matroid(m.delta()));
      EXPECT_EQ(rank(m, full), m.rank());
      for (std::uint64_t x = 0; x <= full.bits(); ++x) {
        const ElementSet a(x);
        EXPECT_EQ(connectivity(m, a), connectivity(m, a.complement(n)));
        EXPECT_GE(connectivity(m, a), 0);
        EXPECT_EQ(is_separator(m, a), is_separator(m, a.complement(n)));
        for (std::uint64_t y = 0; y <= full.bits(); ++y) {
          const ElementSet b(y);
          if (a.subset_of(b)) EXPECT_LE(rank(m, a), rank(m, b));
          EXPECT_LE(rank(m, a | b) + rank(m, a & b), rank(m, a) + rank(m, b));
        }
        // With the empty set feasible every element of D_min is a loop.
        if (d.is_feasible(ElementSet())) EXPECT_TRUE(is_separator(m, a));
      }
    });
  }
}

}  // namespace
}  // namespace dm
