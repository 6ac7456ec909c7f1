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

#include "dm/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <thread>
#include <utility>

#include "dm/certify.hpp"
#include "dm/matroid.hpp"
#include "dm/minors.hpp"
#include "dm/structure.hpp"

namespace dm {
namespace {

void require_enumerable(int n) {
  if (n < 1 || n > kMaxEnumerationSize) {
    throw InvalidArgument("enumeration requires 1 <= n <= 4");
  }
}

std::uint64_t candidate_count(int n) {
  // 2^(2^n) - 1 nonempty families; n <= 4 keeps this within 64 bits.
  return (std::uint64_t{1} << (1U << n)) - 1;
}

bool has(FamilyMask family, std::uint64_t subset) {
  return (family >> subset) & 1U;
}

}  // namespace

bool family_satisfies_exchange(int /*n*/, FamilyMask family) {
  if (family == 0) return false;
  for (FamilyMask xs = family; xs != 0; xs &= xs - 1) {
    const std::uint64_t x = std::countr_zero(xs);
    for (FamilyMask ys = family; ys != 0; ys &= ys - 1) {
      const std::uint64_t diff =
          x ^ static_cast<std::uint64_t>(std::countr_zero(ys));
      for (std::uint64_t us = diff; us != 0; us &= us - 1) {
        const std::uint64_t u = us & (~us + 1);
        // Targets X△{u,v} for v in diff, including v = u.
        bool ok = false;
        for (std::uint64_t vs = diff; vs != 0 && !ok; vs &= vs - 1) {
          const std::uint64_t v = vs & (~vs + 1);
          ok = has(family, v == u ? x ^ u : x ^ u ^ v);
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

FamilyMask pack_family(const DeltaMatroid& d) {
  if (d.size() > 6) throw InvalidArgument("packed families need n <= 6");
  FamilyMask out = 0;
  for (ElementSet f : d.feasible()) out |= FamilyMask{1} << f.bits();
  return out;
}

DeltaMatroid unpack_family(const GroundSet& ground, FamilyMask family) {
  std::vector<ElementSet> sets;
  for (FamilyMask rest = family; rest != 0; rest &= rest - 1) {
    sets.emplace_back(static_cast<std::uint64_t>(std::countr_zero(rest)));
  }
  return DeltaMatroid::from_trusted(ground, std::move(sets));
}

void for_each_delta_matroid(
    int n, const std::function<void(const DeltaMatroid&)>& fn) {
  require_enumerable(n);
  const GroundSet ground = GroundSet::canonical(n);
  const std::uint64_t total = candidate_count(n);
  for (FamilyMask family = 1; family <= total; ++family) {
    if (family_satisfies_exchange(n, family)) fn(unpack_family(ground, family));
  }
}

std::vector<DeltaMatroid> enumerate_all(int n) {
  std::vector<DeltaMatroid> out;
  for_each_delta_matroid(n, [&](const DeltaMatroid& d) { out.push_back(d); });
  return out;
}

std::uint64_t count_delta_matroids(int n) {
  require_enumerable(n);
  std::uint64_t count = 0;
  const std::uint64_t total = candidate_count(n);
  for (FamilyMask family = 1; family <= total; ++family) {
    count += family_satisfies_exchange(n, family) ? 1 : 0;
  }
  return count;
}

std::uint64_t count_delta_matroids_up_to_isomorphism(int n) {
  std::set<std::vector<std::uint64_t>> forms;
  for_each_delta_matroid(
      n, [&](const DeltaMatroid& d) { forms.insert(canonical_form(d)); });
  return forms.size();
}

// --- theorem checks --------------------------------------------------------

namespace {

constexpr std::array<std::pair<Theorem, std::string_view>, 8> kTags = {{
    {Theorem::kTwistWidthFormula, "t2"},
    {Theorem::kTwistMatroid, "tt2"},
    {Theorem::kTwistWidthOne, "tt"},
    {Theorem::kRoughStructure, "tm1"},
    {Theorem::kExcludedMinors, "t1"},
    {Theorem::kMinorClosed, "p1"},
    {Theorem::kMinorTwistCommute, "l1"},
    {Theorem::kCertificate, "l2"},
}};

TheoremCheck blank_check(Theorem t) {
  TheoremCheck check;
  check.theorem = t;
  return check;
}

int min_twist_width(const DeltaMatroid& d) {
  return min_width_twist(d).width.value;
}

// Counts one (instance, property) evaluation.
class Tally {
 public:
  explicit Tally(TheoremCheck& check) : check_(check) {}

  void record(bool ok, const DeltaMatroid& d) {
    record(ok, d, [] { return std::string(); });
  }

  // `detail` is only evaluated for the first failure.
  template <typename Detail>
  void record(bool ok, const DeltaMatroid& d, Detail&& detail) {
    ++check_.checked;
    if (ok) return;
    ++check_.failed;
    if (!check_.first_counterexample) {
      std::string text = "[" + format_family(d) + "]";
      const std::string extra = detail();
      if (!extra.empty()) text += " " + extra;
      check_.first_counterexample = std::move(text);
    }
  }

 private:
  TheoremCheck& check_;
};

void check_formula(const DeltaMatroid& d, Tally& tally) {
  const std::uint64_t count = std::uint64_t{1} << d.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const ElementSet a(bits);
    const int formula = twist_width_formula(d, a);
    const int direct = width(twist(d, a)).value;
    tally.record(formula == direct, d,
                 [&] { return "A=" + d.ground().format(a); });
  }
}

void check_twist_matroid(const DeltaMatroid& d, Tally& tally) {
  const std::uint64_t count = std::uint64_t{1} << d.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const ElementSet a(bits);
    tally.record(is_twist_matroid_witness(d, a) == is_matroid(twist(d, a)), d,
                 [&] { return "A=" + d.ground().format(a); });
  }
}

void check_twist_width_one(const DeltaMatroid& d, Tally& tally) {
  const std::uint64_t count = std::uint64_t{1} << d.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const ElementSet a(bits);
    tally.record(
        is_twist_width_one_witness(d, a) == (width(twist(d, a)).value == 1), d,
        [&] { return "A=" + d.ground().format(a); });
  }
}

void check_rough_structure(const DeltaMatroid& d, Tally& tally) {
  bool width_one = false;
  const std::uint64_t count = std::uint64_t{1} << d.size();
  for (std::uint64_t bits = 0; bits < count && !width_one; ++bits) {
    width_one = width(twist(d, ElementSet(bits))).value == 1;
  }
  tally.record(rough_structure_witnesses(d).empty() != width_one, d);
}

void check_excluded_minors(const DeltaMatroid& d, Tally& tally) {
  const bool obstructed = is_obstructed(d).has_value();
  tally.record(obstructed == (min_width_twist_direct(d).width.value > 1), d);
}

void check_minor_closed(const DeltaMatroid& d, Tally& tally) {
  const int base = min_twist_width(d);
  for (int e = 0; e < d.size(); ++e) {
    const int deleted = min_twist_width(delete_element(d, e));
    const int contracted = min_twist_width(contract_element(d, e));
    for (int k = 0; k <= 2; ++k) {
      if (base > k) continue;
      auto where = [&d, e, k](const char* op) {
        return std::string(op) + " e=" + d.ground().label(e) +
               " k=" + std::to_string(k);
      };
      tally.record(deleted <= k, d, [&] { return where("delete"); });
      tally.record(contracted <= k, d, [&] { return where("contract"); });
    }
  }
}

using MinorKey =
    std::pair<std::vector<std::string>, std::vector<std::uint64_t>>;

MinorKey key_of(const DeltaMatroid& d) {
  MinorKey key{d.ground().labels(), {}};
  for (ElementSet f : d.feasible()) key.second.push_back(f.bits());
  return key;
}

// Every (X, Y) with X, Y disjoint, as a pair of masks.
template <typename Fn>
void for_each_split(int n, Fn&& fn) {
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < count; ++x) {
    for (std::uint64_t y = 0; y < count; ++y) {
      if ((x & y) == 0) fn(ElementSet(x), ElementSet(y));
    }
  }
}

void check_minor_twist_commute(const DeltaMatroid& d, Tally& tally) {
  const std::uint64_t count = std::uint64_t{1} << d.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const ElementSet a(bits);
    const DeltaMatroid twisted = twist(d, a);
    std::set<MinorKey> left, right;
    for_each_split(d.size(), [&](ElementSet x, ElementSet y) {
      left.insert(key_of(minor(twisted, x, y)));
      const DeltaMatroid j = minor(d, x, y);
      right.insert(key_of(twist(j, squeeze(a - (x | y), x | y))));
    });
    tally.record(left == right, d, [&] { return "A=" + d.ground().format(a); });
  }
}

void check_certificate(const DeltaMatroid& d, Tally& tally) {
  if (!d.is_feasible(ElementSet{})) return;
  try {
    const Certificate c = certify(d);
    const bool small = min_width_twist_direct(d).width.value <= 1;
    tally.record(verify_certificate(d, c) && c.is_witness() == small, d);
  } catch (const Error& e) {
    tally.record(false, d, [&] { return std::string(e.what()); });
  }
}

void run_check(Theorem which, const DeltaMatroid& d, Tally& tally) {
  switch (which) {
    case Theorem::kTwistWidthFormula: return check_formula(d, tally);
    case Theorem::kTwistMatroid: return check_twist_matroid(d, tally);
    case Theorem::kTwistWidthOne: return check_twist_width_one(d, tally);
    case Theorem::kRoughStructure: return check_rough_structure(d, tally);
    case Theorem::kExcludedMinors: return check_excluded_minors(d, tally);
    case Theorem::kMinorClosed: return check_minor_closed(d, tally);
    case Theorem::kMinorTwistCommute:
      return check_minor_twist_commute(d, tally);
    case Theorem::kCertificate: return check_certificate(d, tally);
  }
}

EnumerationReport verify_range(int n, const std::vector<Theorem>& which,
                               FamilyMask first, FamilyMask last) {
  EnumerationReport report;
  report.n = n;
  for (Theorem t : which) report.checks.push_back(blank_check(t));
  const GroundSet ground = GroundSet::canonical(n);
  for (FamilyMask family = first; family <= last; ++family) {
    if (!family_satisfies_exchange(n, family)) continue;
    ++report.valid_count;
    const DeltaMatroid d = unpack_family(ground, family);
    for (auto& check : report.checks) {
      Tally tally(check);
      run_check(check.theorem, d, tally);
    }
  }
  return report;
}

}  // namespace

std::string_view theorem_tag(Theorem t) {
  for (const auto& [theorem, tag] : kTags) {
    if (theorem == t) return tag;
  }
  return "?";
}

std::string_view theorem_description(Theorem t) {
  switch (t) {
    case Theorem::kTwistWidthFormula:
      return "w(D*A) = w(D|A) + w(D|E-A) + 2*lambda_Dmin(A)";
    case Theorem::kTwistMatroid:
      return "D*A matroid <=> A separates Dmin and both restrictions are "
             "matroids";
    case Theorem::kTwistWidthOne:
      return "w(D*A) = 1 <=> A separates Dmin, restrictions have widths {0,1}";
    case Theorem::kRoughStructure:
      return "rough-structure witnesses exist <=> some twist has width one";
    case Theorem::kExcludedMinors:
      return "no excluded minor <=> some twist has width at most one";
    case Theorem::kMinorClosed:
      return "twist-width <= k is closed under deletion and contraction";
    case Theorem::kMinorTwistCommute:
      return "minors of D*A = twists of minors of D";
    case Theorem::kCertificate:
      return "certify returns a verified witness or catalog minor";
  }
  return "";
}

Theorem parse_theorem(std::string_view tag) {
  for (const auto& [theorem, name] : kTags) {
    if (name == tag) return theorem;
  }
  throw InvalidArgument("unknown theorem tag '" + std::string(tag) + "'");
}

const std::vector<Theorem>& all_theorems() {
  static const std::vector<Theorem> out = [] {
    std::vector<Theorem> v;
    for (const auto& entry : kTags) v.push_back(entry.first);
    return v;
  }();
  return out;
}

bool EnumerationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const TheoremCheck& c) { return c.passed(); });
}

EnumerationReport verify_theorems(int n, const std::vector<Theorem>& which,
                                  int jobs) {
  require_enumerable(n);
  if (n > 3 && std::find(which.begin(), which.end(),
                         Theorem::kMinorTwistCommute) != which.end()) {
    throw InvalidArgument("the l1 check requires n <= 3");
  }
  const std::uint64_t total = candidate_count(n);
  jobs = std::clamp<int>(jobs, 1, 64);
  std::vector<EnumerationReport> parts(jobs);
  std::vector<std::thread> workers;
  const std::uint64_t block = (total + jobs - 1) / jobs;
  for (int j = 0; j < jobs; ++j) {
    const FamilyMask first = 1 + j * block;
    const FamilyMask last = std::min<std::uint64_t>(total, (j + 1) * block);
    if (first > last) {
      parts[j].checks.clear();
      for (Theorem t : which) parts[j].checks.push_back(blank_check(t));
      continue;
    }
    if (jobs == 1) {
      parts[j] = verify_range(n, which, first, last);
    } else {
      workers.emplace_back([&parts, j, n, &which, first, last] {
        parts[j] = verify_range(n, which, first, last);
      });
    }
  }
  for (auto& w : workers) w.join();

  EnumerationReport report;
  report.n = n;
  report.total_families = total;
  for (Theorem t : which) report.checks.push_back(blank_check(t));
  for (const auto& part : parts) {
    report.valid_count += part.valid_count;
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
      auto& into = report.checks[i];
      const auto& from = part.checks[i];
      into.checked += from.checked;
      into.failed += from.failed;
      if (!into.first_counterexample) {
        into.first_counterexample = from.first_counterexample;
      }
    }
  }
  return report;
}

EnumerationReport verify_theorem(int n, Theorem which, int jobs) {
  return verify_theorems(n, {which}, jobs);
}

// --- random sampling ------------------------------------------------------

namespace {

// Determinant of the principal submatrix on `rows` over GF(p) is nonzero.
bool principal_nonsingular(const std::vector<std::vector<int>>& m,
                           ElementSet rows, int p) {
  const std::vector<int> idx = rows.elements();
  const std::size_t k = idx.size();
  std::vector<std::vector<int>> a(k, std::vector<int>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = m[idx[i]][idx[j]];
  }
  auto inverse = [p](int x) {
    for (int y = 1; y < p; ++y) {
      if (x * y % p == 1) return y;
    }
    return 0;
  };
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && a[pivot][col] == 0) ++pivot;
    if (pivot == k) return false;
    std::swap(a[pivot], a[col]);
    const int inv = inverse(a[col][col]);
    for (std::size_t r = col + 1; r < k; ++r) {
      const int factor = a[r][col] * inv % p;
      for (std::size_t c = col; c < k; ++c) {
        a[r][c] = ((a[r][c] - factor * a[col][c]) % p + p) % p;
      }
    }
  }
  return true;
}

DeltaMatroid symmetric_matrix_sample(std::mt19937_64& rng, int n) {
  static constexpr std::array<int, 3> kPrimes = {2, 3, 5};
  const int p = kPrimes[rng() % kPrimes.size()];
  const int density = static_cast<int>(rng() % 4);  // sparser for small values
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      int value = static_cast<int>(rng() % p);
      if (static_cast<int>(rng() % 4) > density) value = 0;
      m[i][j] = m[j][i] = value;
    }
  }
  std::vector<ElementSet> family;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    if (principal_nonsingular(m, ElementSet(bits), p)) {
      family.emplace_back(bits);
    }
  }
  return DeltaMatroid::validate(GroundSet::canonical(n), std::move(family));
}

// Twists by the smallest feasible set so that the empty set is feasible.
DeltaMatroid normalize(const DeltaMatroid& d) {
  return twist(d, d.feasible().front());
}

DeltaMatroid direct_sum(const DeltaMatroid& left, const DeltaMatroid& right) {
  std::vector<ElementSet> family;
  for (ElementSet f : left.feasible()) {
    for (ElementSet g : right.feasible()) {
      family.push_back(f | ElementSet(g.bits() << left.size()));
    }
  }
  const int n = left.size() + right.size();
  return DeltaMatroid::validate(GroundSet::canonical(n), std::move(family));
}

const std::vector<std::vector<DeltaMatroid>>& small_pieces() {
  static const std::vector<std::vector<DeltaMatroid>> pieces = [] {
    std::vector<std::vector<DeltaMatroid>> out(4);
    for (int k = 1; k <= 3; ++k) out[k] = enumerate_all(k);
    return out;
  }();
  return pieces;
}

DeltaMatroid random_sum(std::mt19937_64& rng, int n) {
  const auto& pieces = small_pieces();
  const int first = 1 + static_cast<int>(rng() % std::min(3, n - 1));
  const auto& left_pool = pieces[first];
  DeltaMatroid left = left_pool[rng() % left_pool.size()];
  const int rest = n - first;
  DeltaMatroid right = rest <= 3 ? pieces[rest][rng() % pieces[rest].size()]
                                 : symmetric_matrix_sample(rng, rest);
  return direct_sum(left, right);
}

DeltaMatroid random_minor(std::mt19937_64& rng, int n) {
  const int extra = 1 + static_cast<int>(rng() % 2);
  DeltaMatroid big = normalize(symmetric_matrix_sample(rng, n + extra));
  big = twist(big, ElementSet(rng() & big.ground().full().bits()));
  ElementSet removed;
  while (removed.size() < extra) {
    removed = removed.with(static_cast<int>(rng() % (n + extra)));
  }
  const ElementSet deleted(removed.bits() & rng());
  const DeltaMatroid m = minor(big, deleted, removed - deleted);
  return DeltaMatroid::from_trusted(GroundSet::canonical(n),
                                    {m.feasible().begin(), m.feasible().end()});
}

}  // namespace

DeltaMatroid sample_delta_matroid(std::mt19937_64& rng, int n) {
  if (n < 1 || n > 6) throw InvalidArgument("sampling supports 1 <= n <= 6");
  DeltaMatroid d = [&] {
    switch (n == 1 ? 0 : rng() % 4) {
      case 0: return symmetric_matrix_sample(rng, n);
      case 1: return random_sum(rng, n);
      case 2: return random_minor(rng, n);
      default: {
        DeltaMatroid base = symmetric_matrix_sample(rng, n);
        return twist(base, ElementSet(rng() & base.ground().full().bits()));
      }
    }
  }();
  return normalize(d);
}

}  // namespace dm
