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

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "sdim/error.hpp"
#include "sdim/jahangir.hpp"
#include "sdim/strong_metric.hpp"

namespace sdim {
namespace {

std::vector<Edge> named_pairs(const JahangirLabeling& lab,
                              std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> out;
  for (auto [i, j] : pairs) out.emplace_back(lab.rim(i), lab.rim(j));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(StronglyResolves, Examples) {
  const DistanceMatrix path = all_pairs_distances(make_path(3));
  EXPECT_TRUE(strongly_resolves(path, 0, 1, 2));
  const DistanceMatrix c4 = all_pairs_distances(make_cycle(4));
  EXPECT_FALSE(strongly_resolves(c4, 1, 0, 2));
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = 0; v < 4; ++v)
      if (u != v) EXPECT_TRUE(strongly_resolves(c4, u, u, v));
}

TEST(StronglyResolves, Errors) {
  const DistanceMatrix d = all_pairs_distances(make_path(3));
  EXPECT_THROW(strongly_resolves(d, 0, 1, 1), Error);
  EXPECT_THROW(strongly_resolves(d, 5, 0, 1), Error);
}

TEST(StrongResolvingSet, WholeVertexSet) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testing::random_connected(rng, 2 + rng() % 15, 0.2);
    VertexSet all(g.order());
    std::iota(all.begin(), all.end(), Vertex{0});
    EXPECT_TRUE(is_strong_resolving_set(g, all_pairs_distances(g), all).ok);
  }
}

TEST(StrongResolvingSet, JahangirTwoThree) {
  const JahangirGraph j = build_jahangir({2, 3});
  const DistanceMatrix d = all_pairs_distances(j.graph);
  const auto& lab = j.labeling;
  const VertexSet good{lab.rim(2), lab.rim(4), lab.rim(6)};
  EXPECT_TRUE(is_strong_resolving_set(j.graph, d, good).ok);

  const VertexSet bad{lab.rim(2), lab.rim(4)};
  const ResolvingCheck check = is_strong_resolving_set(j.graph, d, bad);
  ASSERT_FALSE(check.ok);
  EXPECT_EQ(*check.unresolved, Edge(lab.rim(6), lab.rim(3)));
}

TEST(StrongResolvingSet, RejectsDisconnected) {
  const std::vector<std::pair<Vertex, Vertex>> e{{0, 1}, {2, 3}};
  const Graph g = build_graph(4, e);
  const VertexSet all{0, 1, 2, 3};
  EXPECT_THROW(is_strong_resolving_set(g, all_pairs_distances(g), all), Error);
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_sdim(make_path(2)).size, 1u);
  EXPECT_EQ(brute_force_sdim(build_jahangir({2, 3}).graph).size, 3u);
  EXPECT_EQ(brute_force_sdim(build_jahangir({4, 3}).graph).size, 3u);
  EXPECT_EQ(brute_force_sdim(make_path(4)).size, 1u);
}

TEST(BruteForce, LexicographicFirstBasis) {
  // Both endpoints resolve every pair of a path; 0 comes first.
  EXPECT_EQ(brute_force_sdim(make_path(5)).basis, (VertexSet{0}));
  EXPECT_EQ(brute_force_sdim(make_cycle(4)).basis, (VertexSet{0, 1}));
}

TEST(BruteForce, Limits) {
  try {
    brute_force_sdim(make_path(17));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kTooLarge);
  }
  EXPECT_EQ(brute_force_sdim(make_path(17), 17).size, 1u);
  const std::vector<std::pair<Vertex, Vertex>> e{{0, 1}, {2, 3}};
  EXPECT_THROW(brute_force_sdim(build_graph(4, e)), Error);
}

TEST(MaximallyDistant, Examples) {
  const Graph p3 = make_path(3);
  const DistanceMatrix d = all_pairs_distances(p3);
  EXPECT_TRUE(is_maximally_distant(p3, d, 0, 2));
  EXPECT_FALSE(is_maximally_distant(p3, d, 1, 2));

  const JahangirGraph j23 = build_jahangir({2, 3});
  EXPECT_TRUE(is_maximally_distant(j23.graph, all_pairs_distances(j23.graph),
                                   j23.labeling.rim(2), j23.labeling.rim(5)));

  const JahangirGraph j55 = build_jahangir({5, 5});
  const DistanceMatrix d55 = all_pairs_distances(j55.graph);
  for (Vertex v = 0; v < j55.graph.order(); ++v) {
    if (v != j55.labeling.hub()) EXPECT_FALSE(is_maximally_distant(j55.graph, d55, j55.labeling.hub(), v));
  }
  EXPECT_THROW(is_maximally_distant(p3, d, 1, 1), Error);
  EXPECT_THROW(is_maximally_distant(p3, d, 1, 9), Error);
}

TEST(MmdPairs, Examples) {
  EXPECT_EQ(mmd_pairs(make_cycle(4)).pairs, (std::vector<Edge>{{0, 2}, {1, 3}}));

  const JahangirGraph j23 = build_jahangir({2, 3});
  EXPECT_EQ(mmd_pairs(j23.graph).pairs, named_pairs(j23.labeling, {{2, 5}, {4, 1}, {6, 3}}));

  const JahangirGraph j43 = build_jahangir({4, 3});
  EXPECT_EQ(mmd_pairs(j43.graph).pairs,
            named_pairs(j43.labeling, {{3, 8}, {3, 10}, {7, 2}, {7, 12}, {11, 4}, {11, 6}}));
}

TEST(MmdPairs, MatchesDefinitionalOracle) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_connected(rng, 2 + rng() % 20, 0.15);
    const MmdPairSet mmd = mmd_pairs(g);
    EXPECT_EQ(mmd.pairs, testing::definitional_mmd(g));
    const DistanceMatrix d = all_pairs_distances(g);
    for (const Edge& e : mmd.pairs) {
      EXPECT_LT(e.first, e.second);
      EXPECT_TRUE(is_maximally_distant(g, d, e.first, e.second));
      EXPECT_TRUE(is_maximally_distant(g, d, e.second, e.first));
    }
  }
}

TEST(StrongResolvingGraph, Examples) {
  const Graph c4 = strong_resolving_graph(make_cycle(4));
  EXPECT_EQ(c4.edges(), (std::vector<Edge>{{0, 2}, {1, 3}}));

  const JahangirGraph j33 = build_jahangir({3, 3});
  const Graph srg = strong_resolving_graph(j33.graph);
  EXPECT_EQ(srg.edge_count(), 3u);
  EXPECT_EQ(srg.labels(), j33.graph.labels());
  for (int i : {1, 4, 7}) EXPECT_EQ(srg.degree(j33.labeling.rim(i)), 0u);
  EXPECT_EQ(srg.degree(j33.labeling.hub()), 0u);
  for (Vertex v = 0; v < srg.order(); ++v) EXPECT_LE(srg.degree(v), 1u);

  const JahangirGraph j65 = build_jahangir({6, 5});
  const Graph srg65 = strong_resolving_graph(j65.graph);
  EXPECT_EQ(srg65.edge_count(), 20u);
  EXPECT_TRUE(srg65.has_edge(j65.labeling.rim(4), j65.labeling.rim(11)));
  EXPECT_TRUE(srg65.has_edge(j65.labeling.rim(4), j65.labeling.rim(27)));
  EXPECT_TRUE(srg65.has_edge(j65.labeling.rim(2), j65.labeling.rim(6)));
}

TEST(SdimViaCover, Examples) {
  EXPECT_EQ(sdim_via_cover(build_jahangir({6, 5}).graph).size, 10u);
  EXPECT_EQ(sdim_via_cover(build_jahangir({5, 5}).graph).size, 12u);
  const StrongBasisResult p4 = sdim_via_cover(make_path(4));
  EXPECT_EQ(p4.size, brute_force_sdim(make_path(4)).size);
  EXPECT_EQ(p4.size, 1u);
  EXPECT_EQ(p4.method, SdimMethod::kVertexCoverReduction);
}

TEST(SdimViaCover, RejectsDisconnected) {
  const std::vector<std::pair<Vertex, Vertex>> e{{0, 1}, {2, 3}};
  try {
    sdim_via_cover(build_graph(4, e));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::kDisconnected);
  }
}

// Cover reduction against exhaustive search, plus basis checks.
TEST(SdimViaCover, AgreesWithBruteForce) {
  std::vector<Graph> corpus;
  for (JahangirParams p : {JahangirParams{2, 3}, JahangirParams{2, 4}, JahangirParams{2, 5},
                           JahangirParams{3, 3}}) {
    corpus.push_back(build_jahangir(p).graph);
  }
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    corpus.push_back(testing::random_connected(rng, 2 + rng() % 11, 0.05 + 0.1 * (trial % 5)));
  }
  for (const Graph& g : corpus) {
    const StrongBasisResult brute = brute_force_sdim(g);
    const StrongBasisResult cover = sdim_via_cover(g);
    ASSERT_EQ(brute.size, cover.size);
    const DistanceMatrix d = all_pairs_distances(g);
    EXPECT_TRUE(is_strong_resolving_set(g, d, cover.basis).ok);
    EXPECT_TRUE(is_strong_resolving_set(g, d, brute.basis).ok);
    EXPECT_TRUE(is_resolving_set(d, cover.basis));
    EXPECT_TRUE(is_resolving_set(d, brute.basis));
  }
}

}  // namespace
}  // namespace sdim
