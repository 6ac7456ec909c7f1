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

#ifndef DM_DELTA_MATROID_HPP_
#define DM_DELTA_MATROID_HPP_

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dm/element_set.hpp"
#include "dm/error.hpp"

namespace dm {

// Feasible sets X, Y and an element u of X△Y for which no v in X△Y makes
// X△{u,v} feasible.
struct ExchangeWitness {
  ElementSet x;
  ElementSet y;
  int u = 0;

  friend bool operator==(const ExchangeWitness&,
                         const ExchangeWitness&) = default;
};

class AxiomViolation : public Error {
 public:
  AxiomViolation(ExchangeWitness witness, const std::string& message)
      : Error(message), witness_(witness) {}
  const ExchangeWitness& witness() const { return witness_; }

 private:
  ExchangeWitness witness_;
};

// Brute-force symmetric exchange check over a sorted, deduplicated family.
// Returns the first failing triple in (X, Y, u) order, or nullopt.
std::optional<ExchangeWitness> find_exchange_violation(
    std::span<const ElementSet> sorted_family);

struct Width {
  int value = 0;
  friend constexpr auto operator<=>(Width, Width) = default;
};

// A ground set together with a nonempty family of feasible sets satisfying
// the symmetric exchange axiom. Feasible sets are kept sorted by bitmask, so
// two delta-matroids are equal iff their labels and families are.
class DeltaMatroid {
 public:
  // Checks every invariant; throws InvalidArgument, EmptyFamily or
  // AxiomViolation. Duplicate sets are merged.
  static DeltaMatroid validate(GroundSet ground,
                               std::vector<ElementSet> family);

  // Skips the exchange check. Only for families obtained from a valid
  // delta-matroid by operations known to preserve the axiom.
  static DeltaMatroid from_trusted(GroundSet ground,
                                   std::vector<ElementSet> family);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  std::span<const ElementSet> feasible() const { return feasible_; }
  bool is_feasible(ElementSet s) const;

  friend bool operator==(const DeltaMatroid&, const DeltaMatroid&) = default;

 private:
  DeltaMatroid(GroundSet ground, std::vector<ElementSet> family)
      : ground_(std::move(ground)), feasible_(std::move(family)) {}

  GroundSet ground_;
  std::vector<ElementSet> feasible_;
};

DeltaMatroid twist(const DeltaMatroid& d, ElementSet a);
DeltaMatroid dual(const DeltaMatroid& d);

bool is_loop(const DeltaMatroid& d, int e);
bool is_coloop(const DeltaMatroid& d, int e);

// D\e. Deleting a coloop removes it from every feasible set, which is the
// same as contracting it.
DeltaMatroid delete_element(const DeltaMatroid& d, int e);
// D/e. Contracting a loop is the same as deleting it.
DeltaMatroid contract_element(const DeltaMatroid& d, int e);

// D\X/Y for disjoint X, Y.
DeltaMatroid minor(const DeltaMatroid& d, ElementSet deleted,
                   ElementSet contracted);

// D|A = D \ (E - A).
DeltaMatroid restriction(const DeltaMatroid& d, ElementSet a);

Width width(const DeltaMatroid& d);
int min_feasible_size(const DeltaMatroid& d);
int max_feasible_size(const DeltaMatroid& d);

// Bouchet rank |E| - min |A△F| over feasible F.
int rho(const DeltaMatroid& d, ElementSet a);

bool is_even(const DeltaMatroid& d);

// "{} {a} {a,b}": the feasible sets in canonical order.
std::string format_family(const DeltaMatroid& d);

// Throws InvalidArgument unless `s` lies inside the ground set of `d`.
void require_subset(const DeltaMatroid& d, ElementSet s);

}  // namespace dm

#endif  // DM_DELTA_MATROID_HPP_
