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

#ifndef DM_ELEMENT_SET_HPP_
#define DM_ELEMENT_SET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dm {

inline constexpr int kMaxGroundSize = 64;

// A subset of a ground set; bit i stands for the element at position i.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet singleton(int i) {
    return ElementSet(std::uint64_t{1} << i);
  }
  // The set {0, ..., n-1}.
  static constexpr ElementSet full(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool disjoint(ElementSet other) const {
    return (bits_ & other.bits_) == 0;
  }

  constexpr ElementSet with(int i) const { return *this | singleton(i); }
  constexpr ElementSet without(int i) const {
    return ElementSet(bits_ & ~(std::uint64_t{1} << i));
  }
  // Complement relative to {0, ..., n-1}.
  constexpr ElementSet complement(int n) const {
    return ElementSet(~bits_ & full(n).bits_);
  }
  // Smallest element; the set must be nonempty.
  constexpr int front() const { return std::countr_zero(bits_); }

  friend constexpr ElementSet operator^(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ ^ b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & b.bits_);
  }
  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ | b.bits_);
  }
  // Set difference.
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & ~b.bits_);
  }
  friend constexpr auto operator<=>(ElementSet, ElementSet) = default;

  template <typename Fn>
  constexpr void for_each(Fn&& fn) const {
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      fn(std::countr_zero(rest));
    }
  }

  std::vector<int> elements() const;

 private:
  std::uint64_t bits_ = 0;
};

// Drops the positions in `removed` and shifts the remaining bits down so that
// the kept positions become contiguous (a software PEXT on the complement).
ElementSet squeeze(ElementSet s, ElementSet removed);

// Inverse of squeeze: spreads the low bits of `s` onto the positions of
// `kept` in ascending order.
ElementSet spread(ElementSet s, ElementSet kept);

// Ordered list of distinct element labels; label i owns bit position i.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  // Labels e1, ..., en.
  static GroundSet canonical(int n);
  // Labels a, b, c, ... (n <= 26).
  static GroundSet letters(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  ElementSet full() const { return ElementSet::full(size()); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<int> find(std::string_view label) const;
  // Throws InvalidArgument for unknown labels.
  int index_of(std::string_view label) const;
  ElementSet subset(std::span<const std::string> labels) const;

  GroundSet without(ElementSet removed) const;

  // "{a,b}"; "{}" for the empty set.
  std::string format(ElementSet s) const;
  // Labels joined by `sep`, in ground order.
  std::string join(ElementSet s, std::string_view sep) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

}  // namespace dm

#endif  // DM_ELEMENT_SET_HPP_
