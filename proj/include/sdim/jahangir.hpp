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
#include <string>
#include <string_view>
#include <vector>

#include "sdim/graph.hpp"

namespace sdim {

// Generalized Jahangir graph J(n, m): a rim cycle of n*m vertices u_1..u_nm
// and a hub c joined to u_1, u_{n+1}, ..., u_{n(m-1)+1}.
struct JahangirParams {
  int n = 2;  // spacing between consecutive spokes
  int m = 3;  // number of spokes

  int order() const { return n * m + 1; }
  friend bool operator==(const JahangirParams&, const JahangirParams&) = default;
};

// Throws Error(kInvalidParameter) unless n >= 2 and m >= 3.
void validate(JahangirParams p);

// Vertex ids: u_i is id i-1 and the hub is id n*m. Rim subscripts are taken
// modulo n*m into 1..n*m, so u_0 is u_nm and u_{nm+1} is u_1.
class JahangirLabeling {
 public:
  explicit JahangirLabeling(JahangirParams p);

  JahangirParams params() const { return params_; }
  int rim_size() const { return params_.n * params_.m; }
  Vertex hub() const { return static_cast<Vertex>(rim_size()); }

  int normalize(long long i) const;
  Vertex rim(long long i) const;
  std::optional<int> rim_index(Vertex v) const;

  // u_i with i = 1 (mod n), i.e. a spoke endpoint.
  bool is_spoke(int i) const { return (normalize(i) - 1) % params_.n == 0; }
  // Rim vertex not adjacent to the hub.
  bool in_u2(Vertex v) const;

  std::string name(Vertex v) const;  // "c" or "u<i>"
  LabelMap labels() const;

  // c, u_{nk+1}, ..., u_{n(k+1)+1} for k in 0..m-1.
  VertexSet internal_cycle(int k) const;

 private:
  JahangirParams params_;
};

struct JahangirGraph {
  Graph graph;
  JahangirLabeling labeling;
};

JahangirGraph build_jahangir(JahangirParams p);

enum class JahangirRegime {
  kBaseCase,    // m = 3, n in {2,3,4}
  kEvenMain,    // n even, n >= 6, m >= 4
  kOddMain,     // n odd, n >= 5, m >= 4
  kExploratory  // anything else with n >= 2, m >= 3
};

JahangirRegime classify(JahangirParams p);
std::string_view to_string(JahangirRegime regime);

// Closed-form strong metric dimension, or nullopt outside the covered regimes.
std::optional<int> sdim_formula(JahangirParams p);

// Unordered pair of rim subscripts, normalized to 1 <= i < j <= nm.
struct RimPair {
  int i = 0;
  int j = 0;

  RimPair() = default;
  RimPair(int a, int b) : i(a < b ? a : b), j(a < b ? b : a) {}

  friend auto operator<=>(const RimPair&, const RimPair&) = default;
};

// Predicted strong resolving graph edges split into the three families.
// Each family is sorted and deduplicated.
struct EdgeFamilies {
  std::vector<RimPair> a;  // across cycles sharing an edge
  std::vector<RimPair> b;  // across cycles sharing no edge
  std::vector<RimPair> c;  // inside one internal cycle

  std::vector<RimPair> all() const;
};

EdgeFamilies predicted_srg_edges_even(JahangirParams p);
EdgeFamilies predicted_srg_edges_odd(JahangirParams p);
// Lists for J(2,3), J(3,3), J(4,3).
std::vector<RimPair> predicted_srg_edges_base(JahangirParams p);

// Rim subscripts of the explicit minimum covers, sorted ascending.
std::vector<int> predicted_cover_even(JahangirParams p);
std::vector<int> predicted_cover_odd(JahangirParams p);

std::vector<Edge> to_vertex_edges(const JahangirLabeling& labeling,
                                  std::span<const RimPair> pairs);
VertexSet to_vertex_set(const JahangirLabeling& labeling, std::span<const int> indices);

// ---------------------------------------------------------------------------
// Distance characterizations between and inside internal cycles.
//
// A "cell" is the pair of internal cycles (k, k_other) a statement talks
// about: k_other = k+1 (mod m) for the *-a cases, every non-adjacent k < k'
// for the *-b cases, and k_other = k for the *-c cases.

enum class DistanceLemma { kEvenA, kEvenB, kEvenC, kOddA, kOddB, kOddC };

std::string_view to_string(DistanceLemma lemma);
std::optional<DistanceLemma> parse_distance_lemma(std::string_view text);

enum class PairClass {
  kAtDistance,      // the pairs at the stated distance
  kNonDiametrical,  // odd-a only: distance n and not on a common diametrical path
};

struct LemmaPair {
  int k = 0;
  int k_other = 0;
  PairClass cls = PairClass::kAtDistance;
  std::uint32_t distance = 0;
  RimPair pair;
};

struct LemmaObservation {
  int k = 0;
  int k_other = 0;
  PairClass cls = PairClass::kAtDistance;
  std::uint32_t distance = 0;
  Edge pair;
};

// Closed-form pair lists. Throws kInvalidParameter when (n, m) is outside the
// parity and bounds the case is stated for.
std::vector<LemmaPair> lemma_distance_pairs(JahangirParams p, DistanceLemma lemma);

// The same cells filled from BFS distances instead of index formulas.
std::vector<LemmaObservation> observed_lemma_pairs(const JahangirGraph& j,
                                                   const DistanceMatrix& d,
                                                   DistanceLemma lemma);

// True when some diametrical pair (a, b) has a shortest path passing through
// x and then y, or y and then x.
bool on_common_diametrical_path(const DistanceMatrix& d, Vertex x, Vertex y);

// ---------------------------------------------------------------------------

// Structural match of an arbitrary graph against J(n, m). `to_input[v]` maps
// the canonical id v of build_jahangir(params) to the id in the given graph.
struct JahangirMatch {
  JahangirParams params;
  std::vector<Vertex> to_input;
};

std::optional<JahangirMatch> recognize_jahangir(const Graph& g);

}  // namespace sdim
