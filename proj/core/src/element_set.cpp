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

#include "dm/element_set.hpp"

#include <algorithm>
#include <unordered_set>

#include "dm/error.hpp"

namespace dm {

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int i) { out.push_back(i); });
  return out;
}

ElementSet squeeze(ElementSet s, ElementSet removed) {
  std::uint64_t out = 0;
  int next = 0;
  for (int i = 0; i < kMaxGroundSize; ++i) {
    if (removed.contains(i)) continue;
    if (s.contains(i)) out |= std::uint64_t{1} << next;
    ++next;
  }
  return ElementSet(out);
}

ElementSet spread(ElementSet s, ElementSet kept) {
  std::uint64_t out = 0;
  int next = 0;
  kept.for_each([&](int pos) {
    if (s.contains(next)) out |= std::uint64_t{1} << pos;
    ++next;
  });
  return ElementSet(out);
}

GroundSet::GroundSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.size() > static_cast<std::size_t>(kMaxGroundSize)) {
    throw InvalidArgument("ground set has more than 64 elements");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels_) {
    if (label.empty()) throw InvalidArgument("empty element label");
    if (!seen.insert(label).second) {
      throw InvalidArgument("duplicate element label '" + label + "'");
    }
  }
}

GroundSet GroundSet::canonical(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  return GroundSet(std::move(labels));
}

GroundSet GroundSet::letters(int n) {
  if (n < 0 || n > 26) throw InvalidArgument("letters() supports n <= 26");
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    labels.emplace_back(1, static_cast<char>('a' + i));
  return GroundSet(std::move(labels));
}

std::optional<int> GroundSet::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

int GroundSet::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw InvalidArgument("unknown element '" + std::string(label) + "'");
}

ElementSet GroundSet::subset(std::span<const std::string> labels) const {
  ElementSet out;
  for (const auto& label : labels) out = out.with(index_of(label));
  return out;
}

GroundSet GroundSet::without(ElementSet removed) const {
  std::vector<std::string> kept;
  for (int i = 0; i < size(); ++i) {
    if (!removed.contains(i)) kept.push_back(labels_[i]);
  }
  GroundSet out;
  out.labels_ = std::move(kept);
  return out;
}

std::string GroundSet::join(ElementSet s, std::string_view sep) const {
  std::string out;
  bool first = true;
  s.for_each([&](int i) {
    if (!first) out += sep;
    first = false;
    out += labels_.at(i);
  });
  return out;
}

std::string GroundSet::format(ElementSet s) const {
  return "{" + join(s, ",") + "}";
}

}  // namespace dm
