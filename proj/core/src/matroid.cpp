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

#include <algorithm>

namespace dm {

Matroid::Matroid(DeltaMatroid bases) : bases_(std::move(bases)) {
  if (!is_matroid(bases_)) {
    throw InvalidArgument("bases of a matroid must all have the same size");
  }
}

bool is_matroid(const DeltaMatroid& d) { return width(d).value == 0; }

Matroid d_min(const DeltaMatroid& d) {
  const int smallest = min_feasible_size(d);
  std::vector<ElementSet> bases;
  for (ElementSet f : d.feasible()) {
    if (f.size() == smallest) bases.push_back(f);
  }
  return Matroid(DeltaMatroid::from_trusted(d.ground(), std::move(bases)));
}

int rank(const Matroid& m, ElementSet x) {
  require_subset(m.delta(), x);
  int best = 0;
  for (ElementSet b : m.delta().feasible())
    best = std::max(best, (x & b).size());
  return best;
}

int nullity(const Matroid& m, ElementSet x) { return x.size() - rank(m, x); }

int connectivity(const Matroid& m, ElementSet a) {
  return rank(m, a) + rank(m, a.complement(m.size())) - m.rank();
}

bool is_separator(const Matroid& m, ElementSet a) {
  return connectivity(m, a) == 0;
}

}  // namespace dm
