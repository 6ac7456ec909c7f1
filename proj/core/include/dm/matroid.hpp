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

#ifndef DM_MATROID_HPP_
#define DM_MATROID_HPP_

#include "dm/delta_matroid.hpp"

namespace dm {

// A delta-matroid whose feasible sets (bases) all have the same size.
class Matroid {
 public:
  // Throws InvalidArgument if the bases have different sizes.
  explicit Matroid(DeltaMatroid bases);

  const DeltaMatroid& delta() const { return bases_; }
  const GroundSet& ground() const { return bases_.ground(); }
  int size() const { return bases_.size(); }
  // Common basis size r(M).
  int rank() const { return bases_.feasible().front().size(); }

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  DeltaMatroid bases_;
};

bool is_matroid(const DeltaMatroid& d);

// The matroid whose bases are the minimum-size feasible sets of d.
Matroid d_min(const DeltaMatroid& d);

// max |X ∩ B| over bases B.
int rank(const Matroid& m, ElementSet x);
int nullity(const Matroid& m, ElementSet x);
// r(A) + r(E - A) - r(E).
int connectivity(const Matroid& m, ElementSet a);
bool is_separator(const Matroid& m, ElementSet a);

}  // namespace dm

#endif  // DM_MATROID_HPP_
