// Copyright 2026 The sdim Authors
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

#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "sdim/graph.hpp"
#include "sdim/vertex_cover.hpp"

namespace sdim {

// Unordered mutually-maximally-distant pairs, sorted and deduplicated.
struct MmdPairSet {
  std::size_t order = 0;
  std::vector<Edge> pairs;
};

enum class SdimMethod { kBruteForce, kVertexCoverReduction };
std::string_view to_string(SdimMethod method);

struct StrongBasisResult {
  std::size_t size = 0;
  VertexSet basis;
  SdimMethod method = SdimMethod::kVertexCoverReduction;
};

struct ResolvingCheck {
  bool ok = false;
  // Lexicographically first pair no member of the set resolves, when !ok.
  std::optional<Edge> unresolved;
};

// w strongly resolves {u, v} when d(u,w) = d(u,v) + d(v,w) or
// d(v,w) = d(v,u) + d(u,w). Pairs involving unreachable entries are never
// resolved. Throws on u == v or ids outside the matrix.
bool strongly_resolves(const DistanceMatrix& d, Vertex w, Vertex u, Vertex v);

ResolvingCheck is_strong_resolving_set(const Graph& g, const DistanceMatrix& d,
                                       std::span<const Vertex> set);

// Plain resolving set: every pair is told apart by distance to some member.
bool is_resolving_set(const DistanceMatrix& d, std::span<const Vertex> set);

inline constexpr std::size_t kDefaultBruteForceCap = 16;
inline constexpr std::size_t kMaxBruteForceOrder = 64;

// Smallest strong resolving set by exhaustive search: subsets in ascending
// size, lexicographic within a size, first hit wins. Graphs above size_cap
// (or above kMaxBruteForceOrder) are rejected with kTooLarge.
StrongBasisResult brute_force_sdim(const Graph& g,
                                   std::size_t size_cap = kDefaultBruteForceCap);

// u MD v: no neighbor of u is strictly farther from v than u is.
bool is_maximally_distant(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v);

MmdPairSet mmd_pairs(const Graph& g);
MmdPairSet mmd_pairs(const Graph& g, const DistanceMatrix& d);

// Same vertex set and labels as g, edges are the MMD pairs.
Graph strong_resolving_graph(const Graph& g);
Graph strong_resolving_graph(const Graph& g, const DistanceMatrix& d);

// sdim(g) as the vertex cover number of the strong resolving graph. The cover
// is re-checked as a strong resolving set of g; a failed check throws
// kInternalInconsistency.
StrongBasisResult sdim_via_cover(const Graph& g, CoverSolverOptions options = {});

}  // namespace sdim
