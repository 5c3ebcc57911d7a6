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

#include "sdim/jahangir.hpp"

#include <algorithm>
#include <set>

#include "sdim/error.hpp"

namespace sdim {

namespace {

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string params_text(JahangirParams p) {
  return "J(" + std::to_string(p.n) + "," + std::to_string(p.m) + ")";
}

void require_even_main(JahangirParams p, const char* what) {
  if (classify(p) != JahangirRegime::kEvenMain) {
    throw Error(ErrorKind::kInvalidParameter,
                std::string(what) + " needs n even, n >= 6, m >= 4; got " + params_text(p));
  }
}

void require_odd_main(JahangirParams p, const char* what) {
  if (classify(p) != JahangirRegime::kOddMain) {
    throw Error(ErrorKind::kInvalidParameter,
                std::string(what) + " needs n odd, n >= 5, m >= 4; got " + params_text(p));
  }
}

bool adjacent_cycles(int k, int k_other, int m) {
  const int gap = std::abs(k - k_other);
  return gap == 1 || gap == m - 1;
}

struct Cell {
  int k;
  int k_other;
};

std::vector<Cell> cells_for(JahangirParams p, DistanceLemma lemma) {
  std::vector<Cell> out;
  switch (lemma) {
    case DistanceLemma::kEvenA:
    case DistanceLemma::kOddA:
      for (int k = 0; k < p.m; ++k) out.push_back({k, (k + 1) % p.m});
      break;
    case DistanceLemma::kEvenB:
    case DistanceLemma::kOddB:
      for (int k = 0; k < p.m; ++k)
        for (int k2 = k + 1; k2 < p.m; ++k2)
          if (!adjacent_cycles(k, k2, p.m)) out.push_back({k, k2});
      break;
    case DistanceLemma::kEvenC:
    case DistanceLemma::kOddC:
      for (int k = 0; k < p.m; ++k) out.push_back({k, k});
      break;
  }
  return out;
}

bool is_even_lemma(DistanceLemma lemma) {
  return lemma == DistanceLemma::kEvenA || lemma == DistanceLemma::kEvenB ||
         lemma == DistanceLemma::kEvenC;
}

}  // namespace

void validate(JahangirParams p) {
  if (p.n < 2 || p.m < 3) {
    throw Error(ErrorKind::kInvalidParameter,
                "Jahangir graph needs n >= 2 and m >= 3; got " + params_text(p));
  }
}

JahangirLabeling::JahangirLabeling(JahangirParams p) : params_(p) { validate(p); }

int JahangirLabeling::normalize(long long i) const {
  const long long nm = rim_size();
  return static_cast<int>(((i - 1) % nm + nm) % nm + 1);
}

Vertex JahangirLabeling::rim(long long i) const {
  return static_cast<Vertex>(normalize(i) - 1);
}

std::optional<int> JahangirLabeling::rim_index(Vertex v) const {
  if (v >= hub()) return std::nullopt;
  return static_cast<int>(v) + 1;
}

bool JahangirLabeling::in_u2(Vertex v) const {
  const auto i = rim_index(v);
  return i && !is_spoke(*i);
}

std::string JahangirLabeling::name(Vertex v) const {
  if (v == hub()) return "c";
  if (auto i = rim_index(v)) return "u" + std::to_string(*i);
  return std::to_string(v);
}

LabelMap JahangirLabeling::labels() const {
  LabelMap out;
  for (Vertex v = 0; v <= hub(); ++v) out[v] = name(v);
  return out;
}

VertexSet JahangirLabeling::internal_cycle(int k) const {
  VertexSet out{hub()};
  const long long base = static_cast<long long>(params_.n) * k;
  for (int t = 1; t <= params_.n + 1; ++t) out.push_back(rim(base + t));
  sort_unique(out);
  return out;
}

JahangirGraph build_jahangir(JahangirParams p) {
  JahangirLabeling labeling(p);
  const int nm = labeling.rim_size();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(nm + p.m));
  for (int i = 1; i <= nm; ++i) edges.emplace_back(labeling.rim(i), labeling.rim(i + 1));
  for (int k = 0; k < p.m; ++k) edges.emplace_back(labeling.hub(), labeling.rim(p.n * k + 1));
  Graph g = build_graph(static_cast<std::size_t>(nm) + 1, edges, labeling.labels());
  return {std::move(g), labeling};
}

JahangirRegime classify(JahangirParams p) {
  validate(p);
  if (p.m == 3 && p.n <= 4) return JahangirRegime::kBaseCase;
  if (p.m >= 4 && p.n % 2 == 0 && p.n >= 6) return JahangirRegime::kEvenMain;
  if (p.m >= 4 && p.n % 2 == 1 && p.n >= 5) return JahangirRegime::kOddMain;
  return JahangirRegime::kExploratory;
}

std::string_view to_string(JahangirRegime regime) {
  switch (regime) {
    case JahangirRegime::kBaseCase: return "base";
    case JahangirRegime::kEvenMain: return "even";
    case JahangirRegime::kOddMain: return "odd";
    case JahangirRegime::kExploratory: return "exploratory";
  }
  return "unknown";
}

std::optional<int> sdim_formula(JahangirParams p) {
  if (p.n < 2 || p.m < 3) return std::nullopt;
  switch (classify(p)) {
    case JahangirRegime::kBaseCase: return 3;
    case JahangirRegime::kEvenMain: return p.m * (p.n - 2) / 2;
    case JahangirRegime::kOddMain: return p.m * (p.n - 1) / 2 + p.m - 3;
    case JahangirRegime::kExploratory: return std::nullopt;
  }
  return std::nullopt;
}

std::vector<RimPair> EdgeFamilies::all() const {
  std::vector<RimPair> out;
  out.reserve(a.size() + b.size() + c.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), c.begin(), c.end());
  sort_unique(out);
  return out;
}

EdgeFamilies predicted_srg_edges_even(JahangirParams p) {
  require_even_main(p, "even edge families");
  const JahangirLabeling lab(p);
  const int n = p.n;
  const int m = p.m;
  const int h = n / 2;
  auto pair = [&](long long x, long long y) { return RimPair(lab.normalize(x), lab.normalize(y)); };

  EdgeFamilies f;
  for (int k = 0; k < m; ++k) {
    const int next = (k + 1) % m;
    const int prev = (k + m - 1) % m;
    f.a.push_back(pair(n * k + h + 1, n * next + h + 2));
    f.a.push_back(pair(n * k + h + 1, n * prev + h));
    for (int k2 = 0; k2 < m; ++k2) {
      if (k2 != k && !adjacent_cycles(k, k2, m)) {
        f.b.push_back(pair(n * k + h + 1, n * k2 + h + 1));
      }
    }
    for (int i = 2; i <= h - 1; ++i) f.c.push_back(pair(n * k + i, n * k + i + h + 1));
  }
  sort_unique(f.a);
  sort_unique(f.b);
  sort_unique(f.c);
  return f;
}

EdgeFamilies predicted_srg_edges_odd(JahangirParams p) {
  require_odd_main(p, "odd edge families");
  const JahangirLabeling lab(p);
  const int n = p.n;
  const int m = p.m;
  const int f = n / 2;
  auto pair = [&](long long x, long long y) { return RimPair(lab.normalize(x), lab.normalize(y)); };

  EdgeFamilies out;
  for (int k = 0; k < m; ++k) {
    const long long cur = static_cast<long long>(n) * k;
    const long long next = static_cast<long long>(n) * ((k + 1) % m);
    const long long prev = static_cast<long long>(n) * ((k + m - 1) % m);
    out.a.push_back(pair(cur + f, next + f + 1));
    out.a.push_back(pair(cur + f + 1, prev + f));
    out.a.push_back(pair(cur + f + 1, next + f + 2));
    out.a.push_back(pair(cur + f + 2, prev + f + 1));
    out.a.push_back(pair(cur + f + 2, next + f + 3));
    out.a.push_back(pair(cur + f + 3, prev + f + 2));
    for (int k2 = 0; k2 < m; ++k2) {
      if (k2 == k || adjacent_cycles(k, k2, m)) continue;
      const long long other = static_cast<long long>(n) * k2;
      for (int s = 1; s <= 2; ++s)
        for (int t = 1; t <= 2; ++t) out.b.push_back(pair(cur + f + s, other + f + t));
    }
    for (int i = 2; i <= f; ++i) {
      for (int j = f + 3; j <= n; ++j) {
        if (j - i == f + 1 || j - i == f + 2) out.c.push_back(pair(cur + i, cur + j));
      }
    }
  }
  sort_unique(out.a);
  sort_unique(out.b);
  sort_unique(out.c);
  return out;
}

std::vector<RimPair> predicted_srg_edges_base(JahangirParams p) {
  if (classify(p) != JahangirRegime::kBaseCase) {
    throw Error(ErrorKind::kInvalidParameter,
                "base-case edge list needs m = 3, n in {2,3,4}; got " + params_text(p));
  }
  std::vector<RimPair> out;
  switch (p.n) {
    case 2: out = {{2, 5}, {4, 1}, {6, 3}}; break;
    case 3: out = {{2, 6}, {3, 8}, {5, 9}}; break;
    default: out = {{3, 8}, {3, 10}, {7, 2}, {7, 12}, {11, 4}, {11, 6}}; break;
  }
  sort_unique(out);
  return out;
}

std::vector<int> predicted_cover_even(JahangirParams p) {
  require_even_main(p, "even cover");
  const JahangirLabeling lab(p);
  const int h = p.n / 2;
  std::vector<int> out;
  for (int k = 0; k < p.m; ++k) {
    out.push_back(lab.normalize(p.n * k + h + 1));
    for (int i = 2; i <= h - 1; ++i) out.push_back(lab.normalize(p.n * k + i));
  }
  sort_unique(out);
  return out;
}

std::vector<int> predicted_cover_odd(JahangirParams p) {
  require_odd_main(p, "odd cover");
  const JahangirLabeling lab(p);
  const int n = p.n;
  const int m = p.m;
  const int f = n / 2;
  std::vector<int> out;
  for (int l = 0; l <= m - 3; ++l) {
    out.push_back(lab.normalize(n * l + f + 1));
    out.push_back(lab.normalize(n * l + f + 2));
  }
  out.push_back(lab.normalize(n * (m - 1) + f + 2));
  for (int k = 0; k <= m - 2; ++k)
    for (int i = 2; i <= f; ++i) out.push_back(lab.normalize(n * k + i));
  for (int i = f + 3; i <= n; ++i) out.push_back(lab.normalize(n * (m - 1) + i));
  sort_unique(out);
  return out;
}

std::vector<Edge> to_vertex_edges(const JahangirLabeling& labeling,
                                  std::span<const RimPair> pairs) {
  std::vector<Edge> out;
  out.reserve(pairs.size());
  for (const RimPair& rp : pairs) out.emplace_back(labeling.rim(rp.i), labeling.rim(rp.j));
  sort_unique(out);
  return out;
}

VertexSet to_vertex_set(const JahangirLabeling& labeling, std::span<const int> indices) {
  VertexSet out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(labeling.rim(i));
  sort_unique(out);
  return out;
}

std::string_view to_string(DistanceLemma lemma) {
  switch (lemma) {
    case DistanceLemma::kEvenA: return "even-a";
    case DistanceLemma::kEvenB: return "even-b";
    case DistanceLemma::kEvenC: return "even-c";
    case DistanceLemma::kOddA: return "odd-a";
    case DistanceLemma::kOddB: return "odd-b";
    case DistanceLemma::kOddC: return "odd-c";
  }
  return "unknown";
}

std::optional<DistanceLemma> parse_distance_lemma(std::string_view text) {
  for (auto lemma : {DistanceLemma::kEvenA, DistanceLemma::kEvenB, DistanceLemma::kEvenC,
                     DistanceLemma::kOddA, DistanceLemma::kOddB, DistanceLemma::kOddC}) {
    if (to_string(lemma) == text) return lemma;
  }
  return std::nullopt;
}

std::vector<LemmaPair> lemma_distance_pairs(JahangirParams p, DistanceLemma lemma) {
  if (is_even_lemma(lemma)) {
    require_even_main(p, "even distance lemma");
  } else {
    require_odd_main(p, "odd distance lemma");
  }
  const JahangirLabeling lab(p);
  const int n = p.n;
  const int half = n / 2;
  const auto at = [&](long long x, long long y) { return RimPair(lab.normalize(x), lab.normalize(y)); };

  std::vector<LemmaPair> out;
  auto emit = [&](Cell cell, PairClass cls, int distance, RimPair rp) {
    out.push_back({cell.k, cell.k_other, cls, static_cast<std::uint32_t>(distance), rp});
  };
  for (const Cell cell : cells_for(p, lemma)) {
    const long long cur = static_cast<long long>(n) * cell.k;
    const long long other = static_cast<long long>(n) * cell.k_other;
    switch (lemma) {
      case DistanceLemma::kEvenA:
        emit(cell, PairClass::kAtDistance, n + 1, at(cur + half + 1, other + half + 2));
        emit(cell, PairClass::kAtDistance, n + 1, at(cur + half, other + half + 1));
        break;
      case DistanceLemma::kEvenB:
        emit(cell, PairClass::kAtDistance, n + 2, at(cur + half + 1, other + half + 1));
        break;
      case DistanceLemma::kOddA:
        emit(cell, PairClass::kAtDistance, n + 1, at(cur + half + 1, other + half + 2));
        emit(cell, PairClass::kNonDiametrical, n, at(cur + half, other + half + 1));
        emit(cell, PairClass::kNonDiametrical, n, at(cur + half + 2, other + half + 3));
        break;
      case DistanceLemma::kOddB:
        for (int s = 1; s <= 2; ++s)
          for (int t = 1; t <= 2; ++t)
            emit(cell, PairClass::kAtDistance, n + 1, at(cur + half + s, other + half + t));
        break;
      case DistanceLemma::kEvenC:
      case DistanceLemma::kOddC:
        for (int i = 2; i <= n; ++i) {
          for (int j = i + 1; j <= n; ++j) {
            const int gap = j - i;
            const bool hit = lemma == DistanceLemma::kEvenC
                                 ? gap == half + 1
                                 : (gap == half + 1 || gap == half + 2);
            if (hit) emit(cell, PairClass::kAtDistance, half + 1, at(cur + i, cur + j));
          }
        }
        break;
    }
  }
  return out;
}

bool on_common_diametrical_path(const DistanceMatrix& d, Vertex x, Vertex y) {
  const auto diam = d.max_finite();
  if (!d.reachable(x, y)) return false;
  const auto n = static_cast<Vertex>(d.order());
  for (Vertex a = 0; a < n; ++a) {
    if (!d.reachable(a, x)) continue;
    for (Vertex b = 0; b < n; ++b) {
      if (d(a, b) != diam || !d.reachable(y, b)) continue;
      if (d(a, x) + d(x, y) + d(y, b) == diam) return true;
    }
  }
  return false;
}

std::vector<LemmaObservation> observed_lemma_pairs(const JahangirGraph& j,
                                                   const DistanceMatrix& d,
                                                   DistanceLemma lemma) {
  const JahangirParams p = j.labeling.params();
  if (is_even_lemma(lemma)) {
    require_even_main(p, "even distance lemma");
  } else {
    require_odd_main(p, "odd distance lemma");
  }
  const int n = p.n;
  const auto target = [&]() -> std::uint32_t {
    switch (lemma) {
      case DistanceLemma::kEvenA: return n + 1;
      case DistanceLemma::kEvenB: return n + 2;
      case DistanceLemma::kOddA: return n + 1;
      case DistanceLemma::kOddB: return n + 1;
      case DistanceLemma::kEvenC:
      case DistanceLemma::kOddC: return n / 2 + 1;
    }
    return 0;
  }();
  const bool inside = lemma == DistanceLemma::kEvenC || lemma == DistanceLemma::kOddC;

  std::vector<LemmaObservation> out;
  for (const Cell cell : cells_for(p, lemma)) {
    VertexSet xs = j.labeling.internal_cycle(cell.k);
    VertexSet ys = j.labeling.internal_cycle(cell.k_other);
    if (inside) {
      std::erase_if(xs, [&](Vertex v) { return !j.labeling.in_u2(v); });
      ys = xs;
    }
    std::set<Edge> seen;
    for (Vertex x : xs) {
      for (Vertex y : ys) {
        if (x == y || !seen.insert(Edge(x, y)).second) continue;
        const auto dist = d(x, y);
        if (dist == target) {
          out.push_back({cell.k, cell.k_other, PairClass::kAtDistance, dist, Edge(x, y)});
        } else if (lemma == DistanceLemma::kOddA && dist == static_cast<std::uint32_t>(n) &&
                   !on_common_diametrical_path(d, x, y)) {
          out.push_back({cell.k, cell.k_other, PairClass::kNonDiametrical, dist, Edge(x, y)});
        }
      }
    }
  }
  return out;
}

std::optional<JahangirMatch> recognize_jahangir(const Graph& g) {
  const std::size_t order = g.order();
  if (order < 7) return std::nullopt;
  const std::size_t rim = order - 1;
  for (Vertex hub = 0; hub < order; ++hub) {
    const std::size_t m = g.degree(hub);
    if (m < 3 || rim % m != 0 || rim / m < 2) continue;
    const std::size_t n = rim / m;
    if (g.edge_count() != rim + m) continue;

    // Every rim vertex has exactly two rim neighbors.
    bool ok = true;
    for (Vertex v = 0; v < order && ok; ++v) {
      if (v == hub) continue;
      const std::size_t rim_degree = g.degree(v) - (g.has_edge(v, hub) ? 1 : 0);
      ok = rim_degree == 2;
    }
    if (!ok) continue;

    const Vertex start = g.neighbors(hub).front();
    std::vector<Vertex> walk{start};
    std::vector<char> visited(order, 0);
    visited[start] = 1;
    visited[hub] = 1;
    Vertex prev = hub;
    Vertex cur = start;
    for (;;) {
      std::optional<Vertex> step;
      for (Vertex w : g.neighbors(cur)) {
        if (w != hub && w != prev && !visited[w]) {
          step = w;
          break;
        }
      }
      if (!step) break;
      prev = cur;
      cur = *step;
      visited[cur] = 1;
      walk.push_back(cur);
    }
    if (walk.size() != rim || !g.has_edge(walk.back(), start)) continue;
    for (std::size_t pos = 0; pos < rim && ok; ++pos) {
      ok = g.has_edge(hub, walk[pos]) == (pos % n == 0);
    }
    if (!ok) continue;

    JahangirMatch match;
    match.params = {static_cast<int>(n), static_cast<int>(m)};
    match.to_input = walk;
    match.to_input.push_back(hub);
    return match;
  }
  return std::nullopt;
}

}  // namespace sdim
