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

// Width of twists, computed from restrictions and the connectivity of D_min
// rather than by materializing the twisted family.

#ifndef DM_STRUCTURE_HPP_
#define DM_STRUCTURE_HPP_

#include <vector>

#include "dm/delta_matroid.hpp"
#include "dm/matroid.hpp"

namespace dm {

// The three quantities that determine w(D*A).
struct Decomposition {
  ElementSet a;
  Width width_inside;        // w(D|A)
  Width width_outside;       // w(D|(E-A))
  int connectivity_min = 0;  // λ of D_min at A

  int twist_width() const {
    return width_inside.value + width_outside.value + 2 * connectivity_min;
  }
};

Decomposition decompose(const DeltaMatroid& d, ElementSet a);

// w(D|A) + w(D|(E-A)) + 2 λ_{D_min}(A); equals width(twist(d, a)).
int twist_width_formula(const DeltaMatroid& d, ElementSet a);

// A separates D_min and both restrictions are matroids, i.e. D*A is a matroid.
bool is_twist_matroid_witness(const DeltaMatroid& d, ElementSet a);

// A separates D_min, one restriction is a matroid and the other has width
// one, i.e. D*A has width one.
bool is_twist_width_one_witness(const DeltaMatroid& d, ElementSet a);

struct TwistChoice {
  ElementSet twist;
  Width width;
  friend bool operator==(const TwistChoice&, const TwistChoice&) = default;
};

inline constexpr int kMaxTwistSearchSize = 24;

// Twist set of minimum resulting width, smallest bitmask among ties. The
// search runs over the formula; with `check` every candidate is also twisted
// directly and a mismatch raises InternalError.
TwistChoice min_width_twist(const DeltaMatroid& d, bool check = false);

// Same answer by twisting every subset directly.
TwistChoice min_width_twist_direct(const DeltaMatroid& d);

// Every A with A a separator of D_min, D|A a matroid and D|(E-A) of width
// one, in ascending bitmask order.
std::vector<ElementSet> rough_structure_witnesses(const DeltaMatroid& d);

}  // namespace dm

#endif  // DM_STRUCTURE_HPP_
