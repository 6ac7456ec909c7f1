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

#ifndef DM_ENUMERATE_HPP_
#define DM_ENUMERATE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "dm/delta_matroid.hpp"

namespace dm {

inline constexpr int kMaxEnumerationSize = 4;

// A family over n <= 6 elements packed as a bitmask over the 2^n subsets:
// bit s is set iff the subset with bitmask s is feasible.
using FamilyMask = std::uint64_t;

// Symmetric exchange check directly on the packed family.
bool family_satisfies_exchange(int n, FamilyMask family);

FamilyMask pack_family(const DeltaMatroid& d);
DeltaMatroid unpack_family(const GroundSet& ground, FamilyMask family);

// Calls `fn` for every delta-matroid on labels e1..en, in ascending
// family-mask order. Requires 1 <= n <= 4.
void for_each_delta_matroid(int n,
                            const std::function<void(const DeltaMatroid&)>& fn);
std::vector<DeltaMatroid> enumerate_all(int n);
std::uint64_t count_delta_matroids(int n);
std::uint64_t count_delta_matroids_up_to_isomorphism(int n);

enum class Theorem {
  kTwistWidthFormula,  // t2
  kTwistMatroid,       // tt2
  kTwistWidthOne,      // tt
  kRoughStructure,     // tm1
  kExcludedMinors,     // t1
  kMinorClosed,        // p1
  kMinorTwistCommute,  // l1
  kCertificate,        // l2
};

std::string_view theorem_tag(Theorem t);
std::string_view theorem_description(Theorem t);
// Throws InvalidArgument for unknown tags.
Theorem parse_theorem(std::string_view tag);
const std::vector<Theorem>& all_theorems();

struct TheoremCheck {
  Theorem theorem = Theorem::kTwistWidthFormula;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::optional<std::string> first_counterexample;

  bool passed() const { return failed == 0; }
};

struct EnumerationReport {
  int n = 0;
  std::uint64_t total_families = 0;  // 2^(2^n) - 1
  std::uint64_t valid_count = 0;
  std::vector<TheoremCheck> checks;

  bool passed() const;
};

// Runs the property over every delta-matroid on n elements. The candidate
// range is split into `jobs` contiguous blocks whose reports are merged in
// block order, so the result does not depend on `jobs`. The commutation
// check (l1) requires n <= 3.
EnumerationReport verify_theorem(int n, Theorem which, int jobs = 1);
EnumerationReport verify_theorems(int n, const std::vector<Theorem>& which,
                                  int jobs = 1);

// Random delta-matroid on labels e1..en (1 <= n <= 6) with the empty set
// feasible, drawn from a mix of principal-minor families of random symmetric
// matrices over small prime fields, direct sums of small delta-matroids,
// and minors of larger samples.
DeltaMatroid sample_delta_matroid(std::mt19937_64& rng, int n);

}  // namespace dm

#endif  // DM_ENUMERATE_HPP_
