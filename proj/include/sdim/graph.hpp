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
#include <limits>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sdim {

using Vertex = std::uint32_t;

// Unordered vertex pair, normalized so that first < second.
struct Edge {
  Vertex first = 0;
  Vertex second = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : first(a < b ? a : b), second(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted ascending, no duplicates.
using VertexSet = std::vector<Vertex>;
using LabelMap = std::map<Vertex, std::string>;

// Undirected simple graph on vertices 0..order()-1. Neighbor lists are sorted
// ascending. Instances are immutable once built.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;

  // Edges as normalized pairs in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degrees() const;

  const LabelMap& labels() const noexcept { return labels_; }
  // Label if one is set, otherwise the decimal id.
  std::string name(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(std::size_t, std::span<const std::pair<Vertex, Vertex>>,
                           LabelMap);

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
  LabelMap labels_;
};

// Throws Error (kOutOfRange, kSelfLoop, kDuplicateEdge) naming the offending
// pair and its position in `edges`. Label keys must be < vertex_count.
Graph build_graph(std::size_t vertex_count,
                  std::span<const std::pair<Vertex, Vertex>> edges,
                  LabelMap labels = {});
Graph build_graph(std::size_t vertex_count, std::span<const Edge> edges,
                  LabelMap labels = {});

Graph with_labels(const Graph& g, LabelMap labels);

Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);
Graph make_complete(std::size_t n);
Graph make_star(std::size_t leaves);

// Dense all-pairs hop distances. Entries between different components hold
// kUnreachable, which never takes part in arithmetic.
class DistanceMatrix {
 public:
  using Distance = std::uint32_t;
  static constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t order)
      : order_(order), dist_(order * order, kUnreachable) {}

  std::size_t order() const noexcept { return order_; }

  Distance operator()(Vertex u, Vertex v) const { return dist_[index(u, v)]; }
  Distance& at(Vertex u, Vertex v) { return dist_[index(u, v)]; }
  bool reachable(Vertex u, Vertex v) const {
    return (*this)(u, v) != kUnreachable;
  }

  std::span<const Distance> row(Vertex u) const {
    return {dist_.data() + std::size_t{u} * order_, order_};
  }

  // Largest finite entry, 0 for order <= 1.
  Distance max_finite() const;
  bool all_reachable() const;

 private:
  std::size_t index(Vertex u, Vertex v) const;

  std::size_t order_ = 0;
  std::vector<Distance> dist_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

// Throws Error(kDisconnected) when g is not connected.
void require_connected(const Graph& g, const char* operation);

std::uint32_t diameter(const Graph& g);
std::uint32_t diameter(const DistanceMatrix& d);

}  // namespace sdim
