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

#include "dm/certify.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace dm {

int AuxGraph::vertex_of(int element) const {
  auto it = std::find(elements_.begin(), elements_.end(), element);
  return it == elements_.end() ? -1 : static_cast<int>(it - elements_.begin());
}

bool AuxGraph::has_edge(int u, int v) const {
  const auto& adj = adjacency_.at(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

int AuxGraph::edge_count() const {
  int total = 0;
  for (const auto& adj : adjacency_) total += static_cast<int>(adj.size());
  return total / 2;
}

AuxGraph build_aux_graph(const DeltaMatroid& d) {
  if (!d.is_feasible(ElementSet{})) {
    throw InvalidArgument("the empty set must be feasible");
  }
  AuxGraph g;
  for (int e = 0; e < d.size(); ++e) {
    if (d.is_feasible(ElementSet::singleton(e))) {
      g.singletons_ = g.singletons_.with(e);
    } else {
      g.elements_.push_back(e);
    }
  }
  const int hub = static_cast<int>(g.elements_.size());
  g.adjacency_.assign(hub + 1, {});
  auto connect = [&](int u, int v) {
    auto& adj_u = g.adjacency_[u];
    if (std::find(adj_u.begin(), adj_u.end(), v) != adj_u.end()) return;
    adj_u.push_back(v);
    g.adjacency_[v].push_back(u);
  };
  for (ElementSet f : d.feasible()) {
    if (f.size() != 2) continue;
    const int x = f.front();
    const int y = f.without(x).front();
    const bool x_in_l = g.singletons_.contains(x);
    const bool y_in_l = g.singletons_.contains(y);
    if (!x_in_l && !y_in_l) {
      connect(g.vertex_of(x), g.vertex_of(y));
    } else if (x_in_l != y_in_l) {
      connect(g.vertex_of(x_in_l ? y : x), hub);
    }
  }
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
  return g;
}

std::optional<std::vector<int>> two_coloring(const AuxGraph& g) {
  std::vector<int> color(g.vertex_count(), -1);
  for (int start = 0; start < g.vertex_count(); ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

// BFS distances from `source` using only vertices >= floor.
std::vector<int> distances(const AuxGraph& g, int source, int floor) {
  std::vector<int> dist(g.vertex_count(), kUnreached);
  dist[source] = 0;
  std::deque<int> queue{source};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : g.neighbors(u)) {
      if (v >= floor && dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

int shortest_odd_cycle_length(const AuxGraph& g) {
  int best = kUnreached;
  for (int s = 0; s < g.vertex_count(); ++s) {
    const auto dist = distances(g, s, 0);
    for (int u = 0; u < g.vertex_count(); ++u) {
      if (dist[u] == kUnreached) continue;
      for (int v : g.neighbors(u)) {
        if (dist[v] == dist[u]) best = std::min(best, 2 * dist[u] + 1);
      }
    }
  }
  return best;
}

// Extends `path` to a cycle with exactly `length` vertices, all > path[0],
// trying neighbours in ascending order.
bool extend_cycle(const AuxGraph& g, int length, const std::vector<int>& dist,
                  std::vector<int>& path, std::vector<char>& used) {
  const int start = path.front();
  const int last = path.back();
  const int have = static_cast<int>(path.size());
  if (have == length) return g.has_edge(last, start);
  for (int v : g.neighbors(last)) {
    if (v <= start || used[v]) continue;
    // After v, length - have - 1 more vertices and the closing edge remain.
    if (dist[v] == kUnreached || dist[v] > length - have) continue;
    path.push_back(v);
    used[v] = 1;
    if (extend_cycle(g, length, dist, path, used)) return true;
    used[v] = 0;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> shortest_odd_cycle(const AuxGraph& g) {
  const int length = shortest_odd_cycle_length(g);
  if (length == kUnreached) return std::nullopt;
  for (int s = 0; s < g.vertex_count(); ++s) {
    const auto dist = distances(g, s, s);
    std::vector<int> path{s};
    std::vector<char> used(g.vertex_count(), 0);
    used[s] = 1;
    if (extend_cycle(g, length, dist, path, used)) return path;
  }
  throw InternalError("odd cycle of known length not found");
}

std::string to_string(CertifyRule rule) {
  switch (rule) {
    case CertifyRule::kBipartiteD1: return "bipartite-d1";
    case CertifyRule::kBipartiteWidthZero: return "bipartite-width0";
    case CertifyRule::kBipartiteWidthOne: return "bipartite-width1";
    case CertifyRule::kBipartiteD2: return "bipartite-d2";
    case CertifyRule::kTriangle: return "triangle";
    case CertifyRule::kTriangleHubShared: return "triangle-hub-shared";
    case CertifyRule::kTriangleHubYAlpha: return "triangle-hub-y-alpha";
    case CertifyRule::kTriangleHubXBeta: return "triangle-hub-x-beta";
    case CertifyRule::kTriangleHubAlphaBeta: return "triangle-hub-alpha-beta";
    case CertifyRule::kTriangleHubFour: return "triangle-hub-four";
    case CertifyRule::kLongCycle: return "long-cycle";
    case CertifyRule::kLongCycleHub: return "long-cycle-hub";
    case CertifyRule::kLongCycleHubAlphaBeta:
      return "long-cycle-hub-alpha-beta";
  }
  return "unknown";
}

namespace {

ElementSet pair(int x, int y) { return ElementSet::singleton(x).with(y); }

class Certifier {
 public:
  explicit Certifier(CertifyTrace* trace) : trace_(trace) {}

  Certificate run(const DeltaMatroid& d) {
    const AuxGraph g = build_aux_graph(d);
    if (auto colors = two_coloring(g)) return bipartite(d, g, *colors);
    return odd_cycle(d, g, *shortest_odd_cycle(g));
  }

 private:
  void note(CertifyRule rule) {
    if (trace_ != nullptr) trace_->rules.push_back(rule);
  }

  // D \ (E - keep) / contracted, expected to be isomorphic to catalog entry
  // `index` (1..5). Returns nullopt if it is not.
  static std::optional<Certificate> try_minor(const DeltaMatroid& d,
                                              ElementSet keep,
                                              ElementSet contracted,
                                              int index) {
    const ElementSet deleted = keep.complement(d.size());
    const DeltaMatroid& target = catalog()[index - 1];
    auto iso = are_isomorphic(minor(d, deleted, contracted), target);
    if (!iso) return std::nullopt;
    return Certificate{Obstruction{deleted, contracted, std::move(*iso), index,
                                   ElementSet{}, "D" + std::to_string(index)}};
  }

  static Certificate expect_minor(const DeltaMatroid& d, ElementSet keep,
                                  ElementSet contracted,
                                  std::initializer_list<int> indices) {
    for (int index : indices) {
      if (auto found = try_minor(d, keep, contracted, index)) return *found;
    }
    throw InternalError("expected catalog minor on " + d.ground().format(keep) +
                        " contracting " + d.ground().format(contracted));
  }

  Certificate bipartite(const DeltaMatroid& d, const AuxGraph& g,
                        const std::vector<int>& colors) {
    const int hub_color = colors[g.hub()];
    ElementSet side = g.singletons();
    for (int v = 0; v < g.hub(); ++v) {
      if (colors[v] == hub_color) side = side.with(g.element(v));
    }
    if (trace_ != nullptr) trace_->hubless_class = side.complement(d.size());

    // The empty set is feasible, so D|side keeps exactly the feasible subsets.
    std::optional<ElementSet> two, three;
    bool has_one = false, has_larger = false;
    for (ElementSet f : d.feasible()) {
      if (!f.subset_of(side)) continue;
      if (f.size() == 1) has_one = true;
      if (f.size() > 1) has_larger = true;
      if (f.size() == 2 && !two) two = f;
      if (f.size() == 3 && !three) three = f;
    }
    if (two) {
      note(CertifyRule::kBipartiteD1);
      return expect_minor(d, *two, ElementSet{}, {1});
    }
    if (!has_one) {
      note(CertifyRule::kBipartiteWidthZero);
      return Certificate{Witness{side, Width{0}}};
    }
    if (!has_larger) {
      note(CertifyRule::kBipartiteWidthOne);
      return Certificate{Witness{side, Width{1}}};
    }
    if (!three) throw InternalError("no feasible 3-set in bipartite case");
    note(CertifyRule::kBipartiteD2);
    return expect_minor(d, *three, ElementSet{}, {2});
  }

  // Smallest z in L with {x, z} feasible.
  static int partner_in_l(const DeltaMatroid& d, const AuxGraph& g, int x) {
    int found = -1;
    g.singletons().for_each([&](int z) {
      if (found < 0 && d.is_feasible(pair(x, z))) found = z;
    });
    if (found < 0) throw InternalError("hub edge without a partner in L");
    return found;
  }

  // {x, y, shared} with {x, shared}, {y, shared}, {x, y}, {shared} feasible:
  // D5, or D1 after contracting `shared`.
  static Certificate shared_partner(const DeltaMatroid& d, int x, int y,
                                    int shared) {
    const ElementSet keep = pair(x, y).with(shared);
    if (auto found = try_minor(d, keep, ElementSet{}, 5)) return *found;
    return expect_minor(d, keep, ElementSet::singleton(shared), {1});
  }

  Certificate triangle_with_hub(const DeltaMatroid& d, const AuxGraph& g, int x,
                                int y) {
    const int alpha = partner_in_l(d, g, x);
    const int beta = partner_in_l(d, g, y);
    if (alpha == beta) {
      note(CertifyRule::kTriangleHubShared);
      return shared_partner(d, x, y, alpha);
    }
    if (d.is_feasible(pair(y, alpha))) {
      note(CertifyRule::kTriangleHubYAlpha);
      return shared_partner(d, x, y, alpha);
    }
    if (d.is_feasible(pair(x, beta))) {
      note(CertifyRule::kTriangleHubXBeta);
      return shared_partner(d, x, y, beta);
    }
    if (d.is_feasible(pair(alpha, beta))) {
      note(CertifyRule::kTriangleHubAlphaBeta);
      return expect_minor(d, pair(alpha, beta), ElementSet{}, {1});
    }
    note(CertifyRule::kTriangleHubFour);
    const ElementSet keep = pair(x, y) | pair(alpha, beta);
    if (d.is_feasible(keep)) return expect_minor(d, keep, pair(x, y), {1});
    return expect_minor(d, keep, ElementSet::singleton(alpha), {5});
  }

  Certificate odd_cycle(const DeltaMatroid& d, const AuxGraph& g,
                        std::vector<int> cycle) {
    const int length = static_cast<int>(cycle.size());
    if (trace_ != nullptr) trace_->odd_cycle_lengths.push_back(length);
    const auto hub_at = std::find(cycle.begin(), cycle.end(), g.hub());
    const bool through_hub = hub_at != cycle.end();
    // Put the hub first, keeping the direction.
    if (through_hub) std::rotate(cycle.begin(), hub_at, cycle.end());

    if (length == 3) {
      if (!through_hub) {
        note(CertifyRule::kTriangle);
        ElementSet keep;
        for (int v : cycle) keep = keep.with(g.element(v));
        return expect_minor(d, keep, ElementSet{}, {3, 4});
      }
      return triangle_with_hub(d, g, g.element(cycle[1]), g.element(cycle[2]));
    }

    ElementSet keep;
    for (int v : cycle) {
      if (v != g.hub()) keep = keep.with(g.element(v));
    }
    const ElementSet contracted =
        pair(g.element(cycle[length - 2]), g.element(cycle[length - 1]));
    if (through_hub) {
      const int alpha = partner_in_l(d, g, g.element(cycle[1]));
      const int beta = partner_in_l(d, g, g.element(cycle[length - 1]));
      if (alpha != beta && d.is_feasible(pair(alpha, beta))) {
        note(CertifyRule::kLongCycleHubAlphaBeta);
        return expect_minor(d, pair(alpha, beta), ElementSet{}, {1});
      }
      note(CertifyRule::kLongCycleHub);
      keep = keep.with(alpha).with(beta);
    } else {
      note(CertifyRule::kLongCycle);
    }
    return reduce(d, keep, contracted, length);
  }

  // Recurses on (D|keep)/contracted and lifts the minor back to D.
  Certificate reduce(const DeltaMatroid& d, ElementSet keep,
                     ElementSet contracted, int cycle_length) {
    const ElementSet outside = keep.complement(d.size());
    const DeltaMatroid smaller = minor(d, outside, contracted);
    if (!smaller.is_feasible(ElementSet{})) {
      throw InternalError("reduced instance lost the empty set");
    }
    const AuxGraph g = build_aux_graph(smaller);
    const auto cycle = shortest_odd_cycle(g);
    if (!cycle || static_cast<int>(cycle->size()) >= cycle_length) {
      throw InternalError("reduced instance has no shorter odd cycle");
    }
    Certificate inner = odd_cycle(smaller, g, *cycle);
    if (inner.is_witness()) {
      throw InternalError("reduced instance produced a twist witness");
    }
    Obstruction lifted = inner.obstruction();
    const ElementSet survivors = keep - contracted;
    lifted.deleted = outside | spread(lifted.deleted, survivors);
    lifted.contracted = contracted | spread(lifted.contracted, survivors);
    return Certificate{std::move(lifted)};
  }

  CertifyTrace* trace_;
};

}  // namespace

bool verify_certificate(const DeltaMatroid& d, const Certificate& certificate) {
  if (certificate.is_witness()) {
    const Witness& w = certificate.witness();
    return w.width.value <= 1 && w.twist.subset_of(d.ground().full()) &&
           width(twist(d, w.twist)) == w.width;
  }
  const Obstruction& o = certificate.obstruction();
  if (o.catalog_index < 1 || o.catalog_index > 5) return false;
  // Certificates name an untwisted catalog member.
  if (!o.twist.empty() || o.target != "D" + std::to_string(o.catalog_index)) {
    return false;
  }
  return verify_obstruction(d, o, catalog()[o.catalog_index - 1]);
}

Certificate certify(const DeltaMatroid& d, CertifyTrace* trace) {
  if (!d.is_feasible(ElementSet{})) {
    throw InvalidArgument("certify requires the empty set to be feasible");
  }
  Certificate out = Certifier(trace).run(d);
  if (!verify_certificate(d, out)) {
    throw InternalError("certificate failed self-verification");
  }
  return out;
}

}  // namespace dm
