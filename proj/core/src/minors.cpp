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

#include "dm/minors.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace dm {
namespace {

void require_small(const DeltaMatroid& d) {
  if (d.size() > kMaxIsomorphismSize) {
    throw InvalidArgument("isomorphism search supports at most 8 elements");
  }
}

std::vector<ElementSet> relabeled(const DeltaMatroid& d,
                                  const std::vector<int>& image) {
  std::vector<ElementSet> out;
  out.reserve(d.feasible().size());
  for (ElementSet f : d.feasible()) {
    std::uint64_t bits = 0;
    f.for_each([&](int i) { bits |= std::uint64_t{1} << image[i]; });
    out.emplace_back(bits);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::array<int, kMaxGroundSize + 1> size_profile(const DeltaMatroid& d) {
  std::array<int, kMaxGroundSize + 1> counts{};
  for (ElementSet f : d.feasible()) ++counts[f.size()];
  return counts;
}

DeltaMatroid make(int n, std::initializer_list<std::uint64_t> family) {
  std::vector<ElementSet> sets;
  for (std::uint64_t bits : family) sets.emplace_back(bits);
  return DeltaMatroid::validate(GroundSet::letters(n), std::move(sets));
}

// Ascending submasks of `mask` with exactly `count` elements.
template <typename Fn>
bool for_each_submask(ElementSet mask, int count, Fn&& fn) {
  std::uint64_t s = 0;
  const std::uint64_t m = mask.bits();
  while (true) {
    if (std::popcount(s) == count && fn(ElementSet(s))) return true;
    if (s == m) return false;
    s = ((s | ~m) + 1) & m;
  }
}

}  // namespace

ElementSet IsoMap::apply(ElementSet s) const {
  std::uint64_t bits = 0;
  s.for_each([&](int i) { bits |= std::uint64_t{1} << image.at(i); });
  return ElementSet(bits);
}

std::optional<IsoMap> are_isomorphic(const DeltaMatroid& d,
                                     const DeltaMatroid& target) {
  if (d.size() != target.size()) return std::nullopt;
  require_small(d);
  if (d.feasible().size() != target.feasible().size() ||
      size_profile(d) != size_profile(target)) {
    return std::nullopt;
  }
  std::vector<int> image(d.size());
  std::iota(image.begin(), image.end(), 0);
  const auto goal = target.feasible();
  do {
    const auto mapped = relabeled(d, image);
    if (std::equal(mapped.begin(), mapped.end(), goal.begin(), goal.end())) {
      return IsoMap{image};
    }
  } while (std::next_permutation(image.begin(), image.end()));
  return std::nullopt;
}

std::vector<std::uint64_t> canonical_form(const DeltaMatroid& d) {
  require_small(d);
  std::vector<int> image(d.size());
  std::iota(image.begin(), image.end(), 0);
  std::vector<std::uint64_t> best;
  do {
    std::vector<std::uint64_t> candidate;
    for (ElementSet s : relabeled(d, image)) candidate.push_back(s.bits());
    if (best.empty() || candidate < best) best = std::move(candidate);
  } while (std::next_permutation(image.begin(), image.end()));
  return best;
}

const std::vector<DeltaMatroid>& catalog() {
  constexpr std::uint64_t a = 1, b = 2, c = 4;
  static const std::vector<DeltaMatroid> members = {
      make(2, {0, a, b, a | b}),
      make(3, {0, a, b, c, a | b | c}),
      make(3, {0, a | b, b | c, a | c}),
      make(3, {0, a | b, b | c, a | c, a | b | c}),
      make(3, {0, a, a | b, b | c, a | c}),
  };
  return members;
}

std::string ExcludedMinor::name() const {
  std::string out = "D" + std::to_string(base);
  if (!twist.empty()) out += "*" + matroid.ground().format(twist);
  return out;
}

std::vector<ExcludedMinor> d5_family(bool up_to_isomorphism) {
  std::vector<ExcludedMinor> out;
  std::vector<std::vector<std::uint64_t>> seen;
  const auto& bases = catalog();
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const std::uint64_t count = std::uint64_t{1} << bases[i].size();
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      DeltaMatroid twisted = twist(bases[i], ElementSet(bits));
      if (up_to_isomorphism) {
        auto form = canonical_form(twisted);
        form.insert(form.begin(), static_cast<std::uint64_t>(twisted.size()));
        if (std::find(seen.begin(), seen.end(), form) != seen.end()) continue;
        seen.push_back(std::move(form));
      }
      out.push_back(ExcludedMinor{static_cast<int>(i) + 1, ElementSet(bits),
                                  std::move(twisted)});
    }
  }
  return out;
}

std::optional<Obstruction> has_minor_isomorphic(const DeltaMatroid& d,
                                                const DeltaMatroid& h) {
  const int removed = d.size() - h.size();
  if (removed < 0) return std::nullopt;
  if (d.size() > kMaxMinorSearchSize) {
    throw InvalidArgument("minor search supports at most 24 elements");
  }
  std::optional<Obstruction> found;
  // (X, Y) in ascending bitmask order of X, then of Y.
  const std::uint64_t count = std::uint64_t{1} << d.size();
  for (std::uint64_t x_bits = 0; x_bits < count && !found; ++x_bits) {
    const ElementSet x(x_bits);
    if (x.size() > removed) continue;
    for_each_submask(x.complement(d.size()), removed - x.size(),
                     [&](ElementSet y) {
                       const DeltaMatroid m = minor(d, x, y);
                       if (m.feasible().size() != h.feasible().size()) {
                         return false;
                       }
                       if (auto iso = are_isomorphic(m, h)) {
                         found = Obstruction{x, y, std::move(*iso), 0, {}, {}};
                         return true;
                       }
                       return false;
                     });
  }
  return found;
}

bool verify_obstruction(const DeltaMatroid& d, const Obstruction& obstruction,
                        const DeltaMatroid& target) {
  if (!obstruction.deleted.disjoint(obstruction.contracted)) return false;
  if (!(obstruction.deleted | obstruction.contracted)
           .subset_of(d.ground().full())) {
    return false;
  }
  const DeltaMatroid m = minor(d, obstruction.deleted, obstruction.contracted);
  if (m.size() != target.size() ||
      obstruction.iso.image.size() != static_cast<std::size_t>(m.size())) {
    return false;
  }
  std::vector<int> sorted = obstruction.iso.image;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < m.size(); ++i) {
    if (sorted[i] != i) return false;
  }
  const auto mapped = relabeled(m, obstruction.iso.image);
  const auto goal = target.feasible();
  return std::equal(mapped.begin(), mapped.end(), goal.begin(), goal.end());
}

std::optional<Obstruction> is_obstructed(const DeltaMatroid& d) {
  static const std::vector<ExcludedMinor> members = d5_family(true);
  for (const auto& member : members) {
    if (auto found = has_minor_isomorphic(d, member.matroid)) {
      found->catalog_index = member.base;
      found->twist = member.twist;
      found->target = member.name();
      return found;
    }
  }
  return std::nullopt;
}

const std::vector<MatroidTwistExcluded>& matroid_twist_excluded() {
  static const std::vector<MatroidTwistExcluded> members = [] {
    const DeltaMatroid& d3 = catalog()[2];
    const ElementSet a = ElementSet::singleton(0);
    return std::vector<MatroidTwistExcluded>{
        {"({a},{{},{a}})", make(1, {0, 1}), 0, ElementSet{}},
        {"D3", d3, 3, ElementSet{}},
        {"D3*{a}", twist(d3, a), 3, a},
    };
  }();
  return members;
}

std::optional<Obstruction> matroid_twist_obstructions(const DeltaMatroid& d) {
  for (const auto& member : matroid_twist_excluded()) {
    if (auto found = has_minor_isomorphic(d, member.matroid)) {
      found->catalog_index = member.catalog_index;
      found->twist = member.twist;
      found->target = member.name;
      return found;
    }
  }
  return std::nullopt;
}

}  // namespace dm
