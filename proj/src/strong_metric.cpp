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

#include "sdim/strong_metric.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "sdim/error.hpp"

namespace sdim {

namespace {

void check_vertex(const DistanceMatrix& d, Vertex v) {
  if (v >= d.order()) {
    throw Error(ErrorKind::kOutOfRange, "vertex " + std::to_string(v) +
                                            " not in graph of order " +
                                            std::to_string(d.order()));
  }
}

void check_order(const Graph& g, const DistanceMatrix& d) {
  if (g.order() != d.order()) {
    throw Error(ErrorKind::kInvalidArgument, "distance matrix order does not match graph");
  }
}

bool on_geodesic(const DistanceMatrix& d, Vertex from, Vertex via, Vertex to) {
  if (!d.reachable(from, via) || !d.reachable(via, to) || !d.reachable(from, to)) {
    return false;
  }
  return d(from, to) == d(from, via) + d(via, to);
}

// Advances `idx` (strictly increasing, values < n) to the next k-combination in
// lexicographic order. Returns false after the last one.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::string_view to_string(SdimMethod method) {
  switch (method) {
    case SdimMethod::kBruteForce: return "brute-force";
    case SdimMethod::kVertexCoverReduction: return "vertex-cover-reduction";
  }
  return "unknown";
}

bool strongly_resolves(const DistanceMatrix& d, Vertex w, Vertex u, Vertex v) {
  check_vertex(d, w);
  check_vertex(d, u);
  check_vertex(d, v);
  if (u == v) throw Error(ErrorKind::kInvalidArgument, "strong resolution needs u != v");
  return on_geodesic(d, u, v, w) || on_geodesic(d, v, u, w);
}

ResolvingCheck is_strong_resolving_set(const Graph& g, const DistanceMatrix& d,
                                       std::span<const Vertex> set) {
  check_order(g, d);
  require_connected(g, "is_strong_resolving_set");
  for (Vertex w : set) check_vertex(d, w);
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const bool resolved = std::any_of(set.begin(), set.end(), [&](Vertex w) {
        return on_geodesic(d, u, v, w) || on_geodesic(d, v, u, w);
      });
      if (!resolved) return {false, Edge(u, v)};
    }
  }
  return {true, std::nullopt};
}

bool is_resolving_set(const DistanceMatrix& d, std::span<const Vertex> set) {
  for (Vertex w : set) check_vertex(d, w);
  const auto n = static_cast<Vertex>(d.order());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const bool told_apart = std::any_of(set.begin(), set.end(),
                                          [&](Vertex w) { return d(u, w) != d(v, w); });
      if (!told_apart) return false;
    }
  }
  return true;
}

StrongBasisResult brute_force_sdim(const Graph& g, std::size_t size_cap) {
  const std::size_t n = g.order();
  const std::size_t cap = std::min(size_cap, kMaxBruteForceOrder);
  if (n > cap) {
    throw Error(ErrorKind::kTooLarge, "brute force limited to " + std::to_string(cap) +
                                          " vertices, graph has " + std::to_string(n));
  }
  require_connected(g, "brute_force_sdim");
  const DistanceMatrix d = all_pairs_distances(g);

  // One bitmask of resolving vertices per unordered pair.
  std::vector<std::uint64_t> resolvers;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      std::uint64_t mask = 0;
      for (Vertex w = 0; w < n; ++w) {
        if (on_geodesic(d, u, v, w) || on_geodesic(d, v, u, w)) mask |= std::uint64_t{1} << w;
      }
      resolvers.push_back(mask);
    }
  }

  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    do {
      std::uint64_t chosen = 0;
      for (std::size_t i : idx) chosen |= std::uint64_t{1} << i;
      const bool all = std::all_of(resolvers.begin(), resolvers.end(),
                                   [chosen](std::uint64_t m) { return (m & chosen) != 0; });
      if (all) {
        StrongBasisResult result;
        result.basis.assign(idx.begin(), idx.end());
        result.size = k;
        result.method = SdimMethod::kBruteForce;
        return result;
      }
    } while (k > 0 && next_combination(idx, n));
  }
  // V(g) always resolves every pair, so the loop returns.
  throw Error(ErrorKind::kInternalInconsistency, "no strong resolving set found");
}

bool is_maximally_distant(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v) {
  check_order(g, d);
  check_vertex(d, u);
  check_vertex(d, v);
  if (u == v) throw Error(ErrorKind::kInvalidArgument, "maximal distance needs u != v");
  if (!d.reachable(u, v)) return false;
  const auto neighbors = g.neighbors(u);
  return std::all_of(neighbors.begin(), neighbors.end(),
                     [&](Vertex w) { return d(v, w) <= d(u, v); });
}

MmdPairSet mmd_pairs(const Graph& g) {
  require_connected(g, "mmd_pairs");
  return mmd_pairs(g, all_pairs_distances(g));
}

MmdPairSet mmd_pairs(const Graph& g, const DistanceMatrix& d) {
  check_order(g, d);
  require_connected(g, "mmd_pairs");
  MmdPairSet out;
  out.order = g.order();
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (is_maximally_distant(g, d, u, v) && is_maximally_distant(g, d, v, u)) {
        out.pairs.emplace_back(u, v);
      }
    }
  }
  return out;
}

Graph strong_resolving_graph(const Graph& g) {
  require_connected(g, "strong_resolving_graph");
  return strong_resolving_graph(g, all_pairs_distances(g));
}

Graph strong_resolving_graph(const Graph& g, const DistanceMatrix& d) {
  return build_graph(g.order(), mmd_pairs(g, d).pairs, g.labels());
}

StrongBasisResult sdim_via_cover(const Graph& g, CoverSolverOptions options) {
  require_connected(g, "sdim_via_cover");
  const DistanceMatrix d = all_pairs_distances(g);
  const Graph srg = strong_resolving_graph(g, d);
  CoverResult cover = exact_min_vertex_cover(srg, options);
  const ResolvingCheck check = is_strong_resolving_set(g, d, cover.cover);
  if (!check.ok) {
    throw Error(ErrorKind::kInternalInconsistency,
                "minimum cover of the strong resolving graph leaves pair {" +
                    g.name(check.unresolved->first) + ", " +
                    g.name(check.unresolved->second) + "} unresolved");
  }
  StrongBasisResult result;
  result.size = cover.size;
  result.basis = std::move(cover.cover);
  result.method = SdimMethod::kVertexCoverReduction;
  return result;
}

}  // namespace sdim
