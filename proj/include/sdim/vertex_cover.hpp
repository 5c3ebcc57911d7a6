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

#include <cstdint>
#include <optional>
#include <span>

#include "sdim/graph.hpp"

namespace sdim {

struct CoverResult {
  VertexSet cover;
  std::size_t size = 0;
  // True when no smaller cover exists.
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
};

struct CoverCheck {
  bool ok = false;
  // Lexicographically first uncovered edge when !ok.
  std::optional<Edge> uncovered;
};

CoverCheck is_vertex_cover(const Graph& g, std::span<const Vertex> set);
bool is_independent_set(const Graph& g, std::span<const Vertex> set);

// Repeatedly takes a maximum-degree vertex of the remaining graph (lowest id on
// ties). Marked optimal only when it meets matching_lower_bound.
CoverResult greedy_cover(const Graph& g);

// Size of the maximal matching built by scanning vertices and then their
// neighbors in ascending id order.
std::size_t matching_lower_bound(const Graph& g);

struct CoverSolverOptions {
  std::size_t vertex_cap = 256;
};

// Branch and bound: isolated-vertex and degree-one reductions, branching on a
// maximum-degree vertex (lowest id) as "v in cover" / "N(v) in cover", pruned
// by a maximal matching bound against the incumbent. Seeded with greedy_cover.
CoverResult exact_min_vertex_cover(const Graph& g, CoverSolverOptions options = {});

// Complement of the exact minimum cover.
VertexSet max_independent_set(const Graph& g, CoverSolverOptions options = {});

}  // namespace sdim
