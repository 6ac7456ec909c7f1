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

#ifndef DM_MINORS_HPP_
#define DM_MINORS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dm/delta_matroid.hpp"

namespace dm {

// Bijection between ground positions: source position i maps to target
// position image[i].
struct IsoMap {
  std::vector<int> image;

  ElementSet apply(ElementSet s) const;
  friend bool operator==(const IsoMap&, const IsoMap&) = default;
};

inline constexpr int kMaxIsomorphismSize = 8;

// First feasibility-preserving bijection from `d` onto `target` in
// lexicographic permutation order, or nullopt. Ground sets of different
// sizes are never isomorphic. Throws InvalidArgument above 8 elements.
std::optional<IsoMap> are_isomorphic(const DeltaMatroid& d,
                                     const DeltaMatroid& target);

// Lexicographically least sorted bitmask family over all relabelings.
std::vector<std::uint64_t> canonical_form(const DeltaMatroid& d);

// D1, ..., D5 on labels a, b (D1) or a, b, c. Index 0 holds D1.
const std::vector<DeltaMatroid>& catalog();

// A member of the excluded-minor family: catalog entry D_{base} twisted by
// `twist` (positions in the catalog entry's ground set).
struct ExcludedMinor {
  int base = 1;  // 1..5
  ElementSet twist;
  DeltaMatroid matroid;

  std::string name() const;
};

// All 36 twists of D1..D5 ordered by (base, twist bitmask), or only the first
// member of each isomorphism class.
std::vector<ExcludedMinor> d5_family(bool up_to_isomorphism);

// D\deleted/contracted is isomorphic, through `iso`, to the named target.
struct Obstruction {
  ElementSet deleted;
  ElementSet contracted;
  IsoMap iso;
  // Catalog index 1..5 of the base delta-matroid, or 0 when the target is
  // not a catalog twist.
  int catalog_index = 0;
  ElementSet twist;
  std::string target;
};

inline constexpr int kMaxMinorSearchSize = 24;

// First (X, Y) in order (bitmask of X, bitmask of Y) with
// D\X/Y isomorphic to `h`. The result carries no target labels.
std::optional<Obstruction> has_minor_isomorphic(const DeltaMatroid& d,
                                                const DeltaMatroid& h);

// Recomputes the minor and checks that the map carries it onto `target`.
bool verify_obstruction(const DeltaMatroid& d, const Obstruction& obstruction,
                        const DeltaMatroid& target);

// Scans the deduplicated excluded-minor family in order.
std::optional<Obstruction> is_obstructed(const DeltaMatroid& d);

// ({a}, {∅, {a}}), D3 and D3*{a}: the excluded minors for having a twist of
// width zero.
struct MatroidTwistExcluded {
  std::string name;
  DeltaMatroid matroid;
  int catalog_index = 0;
  ElementSet twist;
};
const std::vector<MatroidTwistExcluded>& matroid_twist_excluded();

std::optional<Obstruction> matroid_twist_obstructions(const DeltaMatroid& d);

}  // namespace dm

#endif  // DM_MINORS_HPP_
