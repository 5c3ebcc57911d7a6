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

#include "sdim/vertex_cover.hpp"

#include <algorithm>

#include "sdim/error.hpp"

namespace sdim {

namespace {

std::vector<char> membership(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> in(g.order(), 0);
  for (Vertex v : set) {
    if (v >= g.order()) {
      throw Error(ErrorKind::kOutOfRange,
                  "vertex " + std::to_string(v) + " not in graph of order " +
                      std::to_string(g.order()));
    }
    in[v] = 1;
  }
  return in;
}

std::size_t live_degree(const Graph& g, const std::vector<char>& alive, Vertex v) {
  std::size_t deg = 0;
  for (Vertex w : g.neighbors(v)) deg += alive[w] ? 1 : 0;
  return deg;
}

std::size_t live_matching(const Graph& g, const std::vector<char>& alive) {
  std::vector<char> matched(g.order(), 0);
  std::size_t size = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (!alive[u] || matched[u]) continue;
    for (Vertex v : g.neighbors(u)) {
      if (alive[v] && !matched[v]) {
        matched[u] = matched[v] = 1;
        ++size;
        break;
      }
    }
  }
  return size;
}

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, VertexSet incumbent)
      : g_(g), best_(std::move(incumbent)) {}

  void run() {
    search(std::vector<char>(g_.order(), 1), {});
  }

  VertexSet take_best() { return std::move(best_); }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void search(std::vector<char> alive, VertexSet chosen) {
    ++nodes_;
    reduce(alive, chosen);

    std::optional<Vertex> pivot;
    std::size_t pivot_degree = 0;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (!alive[v]) continue;
      const std::size_t deg = live_degree(g_, alive, v);
      if (deg > pivot_degree) {
        pivot = v;
        pivot_degree = deg;
      }
    }
    if (!pivot) {
      if (chosen.size() < best_.size()) best_ = std::move(chosen);
      return;
    }
    if (chosen.size() + live_matching(g_, alive) >= best_.size()) return;

    const Vertex v = *pivot;
    {
      auto next = alive;
      auto cover = chosen;
      next[v] = 0;
      cover.push_back(v);
      search(std::move(next), std::move(cover));
    }
    if (chosen.size() + pivot_degree < best_.size()) {
      for (Vertex w : g_.neighbors(v)) {
        if (alive[w]) {
          alive[w] = 0;
          chosen.push_back(w);
        }
      }
      alive[v] = 0;
      search(std::move(alive), std::move(chosen));
    }
  }

  // Drops isolated vertices and moves the neighbor of every degree-one vertex
  // into the cover, until neither rule applies.
  void reduce(std::vector<char>& alive, VertexSet& chosen) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex v = 0; v < g_.order(); ++v) {
        if (!alive[v]) continue;
        const std::size_t deg = live_degree(g_, alive, v);
        if (deg == 0) {
          alive[v] = 0;
          changed = true;
        } else if (deg == 1) {
          for (Vertex w : g_.neighbors(v)) {
            if (alive[w]) {
              alive[w] = 0;
              chosen.push_back(w);
              break;
            }
          }
          alive[v] = 0;
          changed = true;
        }
      }
    }
  }

  const Graph& g_;
  VertexSet best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

CoverCheck is_vertex_cover(const Graph& g, std::span<const Vertex> set) {
  const auto in = membership(g, set);
  for (const Edge& e : g.edges()) {
    if (!in[e.first] && !in[e.second]) return {false, e};
  }
  return {true, std::nullopt};
}

bool is_independent_set(const Graph& g, std::span<const Vertex> set) {
  const auto in = membership(g, set);
  for (const Edge& e : g.edges()) {
    if (in[e.first] && in[e.second]) return false;
  }
  return true;
}

CoverResult greedy_cover(const Graph& g) {
  std::vector<char> alive(g.order(), 1);
  CoverResult result;
  for (;;) {
    std::optional<Vertex> pick;
    std::size_t pick_degree = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!alive[v]) continue;
      const std::size_t deg = live_degree(g, alive, v);
      if (deg > pick_degree) {
        pick = v;
        pick_degree = deg;
      }
    }
    if (!pick) break;
    alive[*pick] = 0;
    result.cover.push_back(*pick);
  }
  std::sort(result.cover.begin(), result.cover.end());
  result.size = result.cover.size();
  result.optimal = result.size == matching_lower_bound(g);
  return result;
}

std::size_t matching_lower_bound(const Graph& g) {
  return live_matching(g, std::vector<char>(g.order(), 1));
}

CoverResult exact_min_vertex_cover(const Graph& g, CoverSolverOptions options) {
  if (g.order() > options.vertex_cap) {
    throw Error(ErrorKind::kTooLarge,
                "exact vertex cover limited to " + std::to_string(options.vertex_cap) +
                    " vertices, graph has " + std::to_string(g.order()));
  }
  BranchAndBound solver(g, greedy_cover(g).cover);
  solver.run();
  CoverResult result;
  result.cover = solver.take_best();
  std::sort(result.cover.begin(), result.cover.end());
  result.size = result.cover.size();
  result.optimal = true;
  result.nodes_explored = solver.nodes();
  return result;
}

VertexSet max_independent_set(const Graph& g, CoverSolverOptions options) {
  const CoverResult cover = exact_min_vertex_cover(g, options);
  const auto in = membership(g, cover.cover);
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!in[v]) out.push_back(v);
  return out;
}

}  // namespace sdim
