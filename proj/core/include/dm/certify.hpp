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

// Constructive certificate for delta-matroids with the empty set feasible:
// either a twist of width at most one, or a minor isomorphic to one of
// D1, ..., D5.
//
// The procedure works on an auxiliary graph G_D. Let L be the elements x with
// {x} feasible. G_D has a vertex for every element outside L plus one hub
// vertex standing for all of L; x–y is an edge when {x,y} is feasible, and
// x–hub is an edge when {x,z} is feasible for some z in L.
//
//  * G_D bipartite: the hub's colour class together with L is a twist set,
//    unless D restricted to it exposes a D1 or D2 minor.
//  * Otherwise a shortest odd cycle either is a triangle, which pins down a
//    D1, D3, D4 or D5 minor on at most four elements, or is longer, in which
//    case contracting its last two elements (after restricting to the cycle
//    and the hub's witnesses) yields a smaller instance with a shorter odd
//    cycle; the minor found there is lifted back.
//
// Feasibility is always read from D itself. Every certificate is re-checked
// before it is returned.

#ifndef DM_CERTIFY_HPP_
#define DM_CERTIFY_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dm/delta_matroid.hpp"
#include "dm/minors.hpp"

namespace dm {

class AuxGraph {
 public:
  // Vertices 0..hub()-1 stand for the elements outside L in ascending order;
  // the last vertex is the hub.
  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int hub() const { return vertex_count() - 1; }
  // Element behind a non-hub vertex.
  int element(int vertex) const { return elements_.at(vertex); }
  // Vertex of an element outside L, or -1 for members of L.
  int vertex_of(int element) const;

  ElementSet singletons() const { return singletons_; }
  const std::vector<int>& neighbors(int vertex) const {
    return adjacency_.at(vertex);
  }
  bool has_edge(int u, int v) const;
  int edge_count() const;

 private:
  friend AuxGraph build_aux_graph(const DeltaMatroid& d);

  ElementSet singletons_;
  std::vector<int> elements_;
  std::vector<std::vector<int>> adjacency_;
};

// Throws InvalidArgument unless the empty set is feasible.
AuxGraph build_aux_graph(const DeltaMatroid& d);

// Colour 0/1 per vertex, BFS from each uncoloured vertex in ascending order
// starting with colour 0; nullopt if some edge joins equal colours.
std::optional<std::vector<int>> two_coloring(const AuxGraph& g);

// Vertex sequence of a shortest odd cycle. Among shortest cycles the
// lexicographically smallest sequence is chosen; it starts at the cycle's
// smallest vertex.
std::optional<std::vector<int>> shortest_odd_cycle(const AuxGraph& g);

// The step that produced a certificate or a reduction.
enum class CertifyRule {
  kBipartiteD1,
  kBipartiteWidthZero,
  kBipartiteWidthOne,
  kBipartiteD2,
  kTriangle,           // no hub: D3 or D4
  kTriangleHubShared,  // alpha == beta: D5, or D1 after contracting alpha
  kTriangleHubYAlpha,
  kTriangleHubXBeta,
  kTriangleHubAlphaBeta,
  kTriangleHubFour,  // restriction to {x, y, alpha, beta}
  kLongCycle,        // no hub: contract and recurse
  kLongCycleHub,     // hub on the cycle: contract and recurse
  kLongCycleHubAlphaBeta,
};

std::string to_string(CertifyRule rule);

struct CertifyTrace {
  // One entry per recursion level, outermost first.
  std::vector<CertifyRule> rules;
  std::vector<int> odd_cycle_lengths;
  // In the bipartite case: the elements of the colour class without the hub.
  std::optional<ElementSet> hubless_class;
};

struct Witness {
  ElementSet twist;
  Width width;
};

struct Certificate {
  std::variant<Witness, Obstruction> value;

  bool is_witness() const { return std::holds_alternative<Witness>(value); }
  const Witness& witness() const { return std::get<Witness>(value); }
  const Obstruction& obstruction() const {
    return std::get<Obstruction>(value);
  }
};

// Requires the empty set to be feasible (InvalidArgument otherwise). Raises
// InternalError if a step does not produce what it should.
Certificate certify(const DeltaMatroid& d, CertifyTrace* trace = nullptr);

// Re-checks a certificate against d.
bool verify_certificate(const DeltaMatroid& d, const Certificate& certificate);

}  // namespace dm

#endif  // DM_CERTIFY_HPP_
