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

#ifndef DM_TESTS_TEST_UTIL_HPP_
#define DM_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dm/delta_matroid.hpp"

namespace dm::testing {

inline std::vector<std::string> words(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// make("a b", {"", "a", "b", "a b"}) builds D1.
inline DeltaMatroid make(const std::string& labels,
                         std::initializer_list<const char*> sets) {
  GroundSet ground(words(labels));
  std::vector<ElementSet> family;
  for (const char* s : sets) family.push_back(ground.subset(words(s)));
  return DeltaMatroid::validate(std::move(ground), std::move(family));
}

inline ElementSet set_of(const DeltaMatroid& d, const std::string& labels) {
  return d.ground().subset(words(labels));
}

// Family as a set of label-strings, independent of bit positions.
inline std::set<std::string> family_strings(const DeltaMatroid& d) {
  std::set<std::string> out;
  for (ElementSet f : d.feasible()) out.insert(d.ground().join(f, " "));
  return out;
}

// Textbook symmetric exchange check on raw integer subsets, kept separate
// from both library implementations.
inline bool oracle_is_delta_matroid(const std::set<unsigned>& family) {
  if (family.empty()) return false;
  for (unsigned x : family) {
    for (unsigned y : family) {
      const unsigned diff = x ^ y;
      for (unsigned u = 0; u < 32; ++u) {
        if (!(diff >> u & 1U)) continue;
        bool exchange = false;
        for (unsigned v = 0; v < 32 && !exchange; ++v) {
          if (!(diff >> v & 1U)) continue;
          const unsigned moved =
              u == v ? x ^ (1U << u) : x ^ (1U << u) ^ (1U << v);
          exchange = family.count(moved) > 0;
        }
        if (!exchange) return false;
      }
    }
  }
  return true;
}

inline std::uint64_t oracle_count(int n) {
  const unsigned subsets = 1U << n;
  const std::uint64_t families = (std::uint64_t{1} << subsets) - 1;
  std::uint64_t count = 0;
  for (std::uint64_t mask = 1; mask <= families; ++mask) {
    std::set<unsigned> family;
    for (unsigned s = 0; s < subsets; ++s) {
      if (mask >> s & 1U) family.insert(s);
    }
    count += oracle_is_delta_matroid(family) ? 1 : 0;
  }
  return count;
}

// Width of the twist by `a`, straight from the definition.
inline int oracle_twist_width(const DeltaMatroid& d, ElementSet a) {
  int lo = 1 << 30, hi = -1;
  for (ElementSet f : d.feasible()) {
    const int size = (f ^ a).size();
    lo = std::min(lo, size);
    hi = std::max(hi, size);
  }
  return hi - lo;
}

inline int oracle_min_twist_width(const DeltaMatroid& d) {
  int best = 1 << 30;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << d.size()); ++a) {
    best = std::min(best, oracle_twist_width(d, ElementSet(a)));
  }
  return best;
}

}  // namespace dm::testing

#endif  // DM_TESTS_TEST_UTIL_HPP_
