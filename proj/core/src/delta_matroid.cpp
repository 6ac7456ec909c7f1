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

#include "dm/delta_matroid.hpp"

#include <algorithm>
#include <limits>

namespace dm {
namespace {

void canonicalize(std::vector<ElementSet>& family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

bool contains_sorted(std::span<const ElementSet> family, ElementSet s) {
  return std::binary_search(family.begin(), family.end(), s);
}

void require_element(const DeltaMatroid& d, int e) {
  if (e < 0 || e >= d.size()) {
    throw InvalidArgument("element index " + std::to_string(e) +
                          " is outside the ground set");
  }
}

}  // namespace

std::optional<ExchangeWitness> find_exchange_violation(
    std::span<const ElementSet> family) {
  for (ElementSet x : family) {
    for (ElementSet y : family) {
      const ElementSet diff = x ^ y;
      std::optional<int> failing;
      diff.for_each([&](int u) {
        if (failing) return;
        bool found = false;
        diff.for_each([&](int v) {
          if (!found) {
            found = contains_sorted(
                family, x ^ ElementSet::singleton(u) ^
                            (u == v ? ElementSet{} : ElementSet::singleton(v)));
          }
        });
        if (!found) failing = u;
      });
      if (failing) return ExchangeWitness{x, y, *failing};
    }
  }
  return std::nullopt;
}

DeltaMatroid DeltaMatroid::validate(GroundSet ground,
                                    std::vector<ElementSet> family) {
  if (family.empty()) throw EmptyFamily();
  const ElementSet full = ground.full();
  for (ElementSet s : family) {
    if (!s.subset_of(full)) {
      throw InvalidArgument(
          "feasible set uses positions outside the ground set");
    }
  }
  canonicalize(family);
  if (auto w = find_exchange_violation(family)) {
    throw AxiomViolation(
        *w, "symmetric exchange fails: X=" + ground.format(w->x) +
                " Y=" + ground.format(w->y) + " u=" + ground.label(w->u));
  }
  return DeltaMatroid(std::move(ground), std::move(family));
}

DeltaMatroid DeltaMatroid::from_trusted(GroundSet ground,
                                        std::vector<ElementSet> family) {
  canonicalize(family);
  return DeltaMatroid(std::move(ground), std::move(family));
}

bool DeltaMatroid::is_feasible(ElementSet s) const {
  return contains_sorted(feasible_, s);
}

void require_subset(const DeltaMatroid& d, ElementSet s) {
  if (!s.subset_of(d.ground().full())) {
    throw InvalidArgument("set is not a subset of the ground set");
  }
}

DeltaMatroid twist(const DeltaMatroid& d, ElementSet a) {
  require_subset(d, a);
  std::vector<ElementSet> family;
  family.reserve(d.feasible().size());
  for (ElementSet f : d.feasible()) family.push_back(a ^ f);
  return DeltaMatroid::from_trusted(d.ground(), std::move(family));
}

DeltaMatroid dual(const DeltaMatroid& d) { return twist(d, d.ground().full()); }

bool is_loop(const DeltaMatroid& d, int e) {
  require_element(d, e);
  return std::none_of(d.feasible().begin(), d.feasible().end(),
                      [e](ElementSet f) { return f.contains(e); });
}

bool is_coloop(const DeltaMatroid& d, int e) {
  require_element(d, e);
  return std::all_of(d.feasible().begin(), d.feasible().end(),
                     [e](ElementSet f) { return f.contains(e); });
}

namespace {

// Keeps the feasible sets whose membership of e equals `keep_with_e` (or all
// of them when e is a loop/coloop) and removes e from the ground set.
DeltaMatroid drop_element(const DeltaMatroid& d, int e, bool keep_with_e) {
  const ElementSet removed = ElementSet::singleton(e);
  const bool degenerate = is_loop(d, e) || is_coloop(d, e);
  std::vector<ElementSet> family;
  for (ElementSet f : d.feasible()) {
    if (degenerate || f.contains(e) == keep_with_e) {
      family.push_back(squeeze(f, removed));
    }
  }
  return DeltaMatroid::from_trusted(d.ground().without(removed),
                                    std::move(family));
}

}  // namespace

DeltaMatroid delete_element(const DeltaMatroid& d, int e) {
  return drop_element(d, e, false);
}

DeltaMatroid contract_element(const DeltaMatroid& d, int e) {
  return drop_element(d, e, true);
}

DeltaMatroid minor(const DeltaMatroid& d, ElementSet deleted,
                   ElementSet contracted) {
  require_subset(d, deleted);
  require_subset(d, contracted);
  if (!deleted.disjoint(contracted)) {
    throw InvalidArgument("delete and contract sets overlap");
  }
  // Highest position first so that lower positions keep their indices.
  DeltaMatroid out = d;
  const ElementSet both = deleted | contracted;
  for (int e = d.size() - 1; e >= 0; --e) {
    if (!both.contains(e)) continue;
    out =
        deleted.contains(e) ? delete_element(out, e) : contract_element(out, e);
  }
  return out;
}

DeltaMatroid restriction(const DeltaMatroid& d, ElementSet a) {
  require_subset(d, a);
  return minor(d, a.complement(d.size()), ElementSet{});
}

int min_feasible_size(const DeltaMatroid& d) {
  int best = std::numeric_limits<int>::max();
  for (ElementSet f : d.feasible()) best = std::min(best, f.size());
  return best;
}

int max_feasible_size(const DeltaMatroid& d) {
  int best = 0;
  for (ElementSet f : d.feasible()) best = std::max(best, f.size());
  return best;
}

Width width(const DeltaMatroid& d) {
  return Width{max_feasible_size(d) - min_feasible_size(d)};
}

int rho(const DeltaMatroid& d, ElementSet a) {
  require_subset(d, a);
  int best = std::numeric_limits<int>::max();
  for (ElementSet f : d.feasible()) best = std::min(best, (a ^ f).size());
  return d.size() - best;
}

bool is_even(const DeltaMatroid& d) {
  const int parity = d.feasible().front().size() % 2;
  return std::all_of(d.feasible().begin(), d.feasible().end(),
                     [parity](ElementSet f) { return f.size() % 2 == parity; });
}

std::string format_family(const DeltaMatroid& d) {
  std::string out;
  for (ElementSet f : d.feasible()) {
    if (!out.empty()) out += ' ';
    out += d.ground().format(f);
  }
  return out;
}

}  // namespace dm
