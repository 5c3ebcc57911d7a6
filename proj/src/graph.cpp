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

#include "sdim/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "sdim/error.hpp"

namespace sdim {

namespace {

std::string pair_text(Vertex a, Vertex b) {
  std::ostringstream os;
  os << "(" << a << "," << b << ")";
  return os.str();
}

void bfs_row(const Graph& g, Vertex source, std::span<DistanceMatrix::Distance> out) {
  std::deque<Vertex> queue{source};
  out[source] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (out[y] == DistanceMatrix::kUnreachable) {
        out[y] = out[x] + 1;
        queue.push_back(y);
      }
    }
  }
}

}  // namespace

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  const auto& nu = adjacency_[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out;
  out.reserve(order());
  for (const auto& nbrs : adjacency_) out.push_back(nbrs.size());
  return out;
}

std::string Graph::name(Vertex v) const {
  if (auto it = labels_.find(v); it != labels_.end()) return it->second;
  return std::to_string(v);
}

Graph build_graph(std::size_t vertex_count,
                  std::span<const std::pair<Vertex, Vertex>> edges,
                  LabelMap labels) {
  Graph g;
  g.adjacency_.resize(vertex_count);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [a, b] = edges[i];
    const std::string where = "edge #" + std::to_string(i) + " " + pair_text(a, b);
    if (a >= vertex_count || b >= vertex_count) {
      throw Error(ErrorKind::kOutOfRange,
                  where + ": vertex id >= " + std::to_string(vertex_count));
    }
    if (a == b) throw Error(ErrorKind::kSelfLoop, where);
    g.adjacency_[a].push_back(b);
    g.adjacency_[b].push_back(a);
  }
  for (Vertex u = 0; u < vertex_count; ++u) {
    auto& nbrs = g.adjacency_[u];
    std::sort(nbrs.begin(), nbrs.end());
    if (auto dup = std::adjacent_find(nbrs.begin(), nbrs.end()); dup != nbrs.end()) {
      throw Error(ErrorKind::kDuplicateEdge,
                  "pair " + pair_text(std::min(u, *dup), std::max(u, *dup)) +
                      " appears more than once");
    }
  }
  for (const auto& [id, text] : labels) {
    if (id >= vertex_count) {
      throw Error(ErrorKind::kOutOfRange,
                  "label for vertex " + std::to_string(id) + " >= " +
                      std::to_string(vertex_count));
    }
  }
  g.edge_count_ = edges.size();
  g.labels_ = std::move(labels);
  return g;
}

Graph build_graph(std::size_t vertex_count, std::span<const Edge> edges,
                  LabelMap labels) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(edges.size());
  for (const Edge& e : edges) pairs.emplace_back(e.first, e.second);
  return build_graph(vertex_count, pairs, std::move(labels));
}

Graph with_labels(const Graph& g, LabelMap labels) {
  return build_graph(g.order(), g.edges(), std::move(labels));
}

Graph make_path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(Vertex(i), Vertex(i + 1));
  return build_graph(n, e);
}

Graph make_cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::kInvalidParameter, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(Vertex(i), Vertex((i + 1) % n));
  return build_graph(n, e);
}

Graph make_complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(Vertex(i), Vertex(j));
  return build_graph(n, e);
}

Graph make_star(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, Vertex(i));
  return build_graph(leaves + 1, e);
}

std::size_t DistanceMatrix::index(Vertex u, Vertex v) const {
  if (u >= order_ || v >= order_) {
    throw Error(ErrorKind::kOutOfRange,
                "distance lookup " + pair_text(u, v) + " in order " +
                    std::to_string(order_));
  }
  return std::size_t{u} * order_ + v;
}

DistanceMatrix::Distance DistanceMatrix::max_finite() const {
  Distance best = 0;
  for (Distance x : dist_)
    if (x != kUnreachable) best = std::max(best, x);
  return best;
}

bool DistanceMatrix::all_reachable() const {
  return std::find(dist_.begin(), dist_.end(), kUnreachable) == dist_.end();
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix d(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    std::span<DistanceMatrix::Distance> row(&d.at(s, 0), g.order());
    bfs_row(g, s, row);
  }
  return d;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<DistanceMatrix::Distance> row(g.order(), DistanceMatrix::kUnreachable);
  bfs_row(g, 0, row);
  return std::find(row.begin(), row.end(), DistanceMatrix::kUnreachable) == row.end();
}

void require_connected(const Graph& g, const char* operation) {
  if (!is_connected(g)) {
    throw Error(ErrorKind::kDisconnected,
                std::string(operation) + " requires a connected graph");
  }
}

std::uint32_t diameter(const Graph& g) {
  require_connected(g, "diameter");
  return diameter(all_pairs_distances(g));
}

std::uint32_t diameter(const DistanceMatrix& d) {
  if (!d.all_reachable()) {
    throw Error(ErrorKind::kDisconnected, "diameter of a disconnected graph");
  }
  return d.max_finite();
}

}  // namespace sdim
