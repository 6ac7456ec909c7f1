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

#include <cstdint>

namespace dm {
namespace {

Decomposition decompose_with(const DeltaMatroid& d, const Matroid& minimal,
                             ElementSet a) {
  return Decomposition{
      a,
      width(restriction(d, a)),
      width(restriction(d, a.complement(d.size()))),
      connectivity(minimal, a),
  };
}

void require_searchable(const DeltaMatroid& d) {
  if (d.size() > kMaxTwistSearchSize) {
    throw InvalidArgument("twist search supports at most 24 elements");
  }
}

}  // namespace

Decomposition decompose(const DeltaMatroid& d, ElementSet a) {
  require_subset(d, a);
  return decompose_with(d, d_min(d), a);
}

int twist_width_formula(const DeltaMatroid& d, ElementSet a) {
  return decompose(d, a).twist_width();
}

bool is_twist_matroid_witness(const DeltaMatroid& d, ElementSet a) {
  const Decomposition parts = decompose(d, a);
  return parts.connectivity_min == 0 && parts.width_inside.value == 0 &&
         parts.width_outside.value == 0;
}

bool is_twist_width_one_witness(const DeltaMatroid& d, ElementSet a) {
  const Decomposition parts = decompose(d, a);
  const int in = parts.width_inside.value;
  const int out = parts.width_outside.value;
  return parts.connectivity_min == 0 &&
         ((in == 0 && out == 1) || (in == 1 && out == 0));
}

TwistChoice min_width_twist(const DeltaMatroid& d, bool check) {
  require_searchable(d);
  const Matroid minimal = d_min(d);
  const std::uint64_t count = std::uint64_t{1} << d.size();
  TwistChoice best{ElementSet{}, Width{d.size() + 1}};
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const ElementSet a(bits);
    const int w = decompose_with(d, minimal, a).twist_width();
    if (check && w != width(twist(d, a)).value) {
      throw InternalError("width formula disagrees with direct twist at A=" +
                          d.ground().format(a));
    }
    if (w < best.width.value) best = TwistChoice{a, Width{w}};
  }
  return best;
}

TwistChoice min_width_twist_direct(const DeltaMatroid& d) {
  require_searchable(d);
  const std::uint64_t count = std::uint64_t{1} << d.size();
  TwistChoice best{ElementSet{}, Width{d.size() + 1}};
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const ElementSet a(bits);
    const Width w = width(twist(d, a));
    if (w < best.width) best = TwistChoice{a, w};
  }
  return best;
}

std::vector<ElementSet> rough_structure_witnesses(const DeltaMatroid& d) {
  require_searchable(d);
  const Matroid minimal = d_min(d);
  std::vector<ElementSet> out;
  const std::uint64_t count = std::uint64_t{1} << d.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const Decomposition parts = decompose_with(d, minimal, ElementSet(bits));
    if (parts.connectivity_min == 0 && parts.width_inside.value == 0 &&
        parts.width_outside.value == 1) {
      out.push_back(parts.a);
    }
  }
  return out;
}

}  // namespace dm
