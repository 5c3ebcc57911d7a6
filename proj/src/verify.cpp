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

#include "sdim/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "sdim/error.hpp"

namespace sdim {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string pair_name(const JahangirLabeling& lab, const Edge& e) {
  return lab.name(e.first) + lab.name(e.second);
}

void compare_edges(const JahangirLabeling& lab, const std::vector<Edge>& predicted,
                   const std::vector<Edge>& computed, VerificationReport& report) {
  std::vector<Edge> missing;
  std::vector<Edge> unexpected;
  std::set_difference(predicted.begin(), predicted.end(), computed.begin(), computed.end(),
                      std::back_inserter(missing));
  std::set_difference(computed.begin(), computed.end(), predicted.begin(), predicted.end(),
                      std::back_inserter(unexpected));
  for (const Edge& e : missing) {
    report.discrepancies.push_back({FindingKind::kSrgEdgeMissing, pair_name(lab, e)});
  }
  for (const Edge& e : unexpected) {
    report.discrepancies.push_back({FindingKind::kSrgEdgeUnexpected, pair_name(lab, e)});
  }
  report.srg_edges_match = missing.empty() && unexpected.empty();
}

void check_disjoint(const EdgeFamilies& f, VerificationReport& report) {
  const auto overlap = [&](const std::vector<RimPair>& x, const std::vector<RimPair>& y,
                           const char* names) {
    std::vector<RimPair> both;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(both));
    for (const RimPair& rp : both) {
      report.discrepancies.push_back(
          {FindingKind::kFamilyOverlap, std::string(names) + ": u" + std::to_string(rp.i) +
                                            "u" + std::to_string(rp.j)});
    }
  };
  overlap(f.a, f.b, "A/B");
  overlap(f.a, f.c, "A/C");
  overlap(f.b, f.c, "B/C");
}

using CellKey = std::tuple<int, int, PairClass>;

void check_lemma(const JahangirGraph& j, const DistanceMatrix& d, DistanceLemma lemma,
                 VerificationReport& report, bool& all_match) {
  std::map<CellKey, std::set<Edge>> predicted;
  std::map<CellKey, std::set<Edge>> observed;
  for (const LemmaPair& lp : lemma_distance_pairs(j.labeling.params(), lemma)) {
    const Edge e(j.labeling.rim(lp.pair.i), j.labeling.rim(lp.pair.j));
    predicted[{lp.k, lp.k_other, lp.cls}].insert(e);
    if (d(e.first, e.second) != lp.distance) {
      all_match = false;
      report.discrepancies.push_back(
          {FindingKind::kLemmaPairMismatch,
           std::string(to_string(lemma)) + ": " + pair_name(j.labeling, e) + " at distance " +
               std::to_string(d(e.first, e.second)) + ", expected " +
               std::to_string(lp.distance)});
    }
  }
  for (const LemmaObservation& ob : observed_lemma_pairs(j, d, lemma)) {
    observed[{ob.k, ob.k_other, ob.cls}].insert(ob.pair);
  }
  std::set<CellKey> keys;
  for (const auto& [key, _] : predicted) keys.insert(key);
  for (const auto& [key, _] : observed) keys.insert(key);
  for (const CellKey& key : keys) {
    const auto& want = predicted[key];
    const auto& got = observed[key];
    if (want == got) continue;
    all_match = false;
    std::ostringstream os;
    os << to_string(lemma) << " cell (" << std::get<0>(key) << "," << std::get<1>(key)
       << (std::get<2>(key) == PairClass::kNonDiametrical ? ",non-diametrical" : "")
       << "): predicted {";
    for (const Edge& e : want) os << " " << pair_name(j.labeling, e);
    os << " } observed {";
    for (const Edge& e : got) os << " " << pair_name(j.labeling, e);
    os << " }";
    report.discrepancies.push_back({FindingKind::kLemmaPairMismatch, os.str()});
  }
}

// Counts distance-n pairs across adjacent cycles and how many of them the
// common-diametrical-path rule excludes.
std::string diametrical_note(const JahangirGraph& j, const DistanceMatrix& d) {
  const JahangirParams p = j.labeling.params();
  std::size_t total = 0;
  std::size_t excluded = 0;
  for (int k = 0; k < p.m; ++k) {
    std::set<Edge> seen;
    for (Vertex x : j.labeling.internal_cycle(k)) {
      for (Vertex y : j.labeling.internal_cycle((k + 1) % p.m)) {
        if (x == y || !seen.insert(Edge(x, y)).second) continue;
        if (d(x, y) != static_cast<std::uint32_t>(p.n)) continue;
        ++total;
        if (on_common_diametrical_path(d, x, y)) ++excluded;
      }
    }
  }
  return "odd-a: " + std::to_string(excluded) + " of " + std::to_string(total) +
         " distance-n pairs across adjacent cycles lie on a common diametrical path";
}

std::string optional_text(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : "-";
}

std::string optional_text(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "-";
}

std::string optional_text(const std::optional<bool>& v) {
  return v ? (*v ? "yes" : "NO") : "-";
}

template <typename T>
ordered_json optional_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json to_json_value(const VerificationReport& r) {
  ordered_json doc;
  doc["n"] = r.params.n;
  doc["m"] = r.params.m;
  doc["regime"] = std::string(to_string(r.regime));
  doc["srg_edges_match"] = optional_json(r.srg_edges_match);
  doc["cover_valid"] = optional_json(r.predicted_cover_valid);
  doc["predicted_cover_size"] = optional_json(r.predicted_cover_size);
  doc["lemma_pairs_match"] = optional_json(r.lemma_pairs_match);
  doc["alpha"] = r.alpha_computed;
  doc["formula_sdim"] = optional_json(r.formula_sdim);
  doc["pipeline_sdim"] = r.pipeline_sdim;
  doc["brute_sdim"] = optional_json(r.brute_force_sdim);
  doc["srg_edges"] = r.srg_edge_count;
  ordered_json findings = ordered_json::array();
  for (const Finding& f : r.discrepancies) {
    findings.push_back({{"kind", std::string(to_string(f.kind))}, {"detail", f.detail}});
  }
  doc["discrepancies"] = std::move(findings);
  doc["notes"] = r.notes;
  doc["status"] = r.passed() ? "PASS" : "FAIL";
  return doc;
}

}  // namespace

std::string_view to_string(FindingKind kind) {
  switch (kind) {
    case FindingKind::kSrgEdgeMissing: return "srg-edge-missing";
    case FindingKind::kSrgEdgeUnexpected: return "srg-edge-unexpected";
    case FindingKind::kFamilyOverlap: return "family-overlap";
    case FindingKind::kPredictedCoverInvalid: return "predicted-cover-invalid";
    case FindingKind::kPredictedCoverSize: return "predicted-cover-size";
    case FindingKind::kAlphaMismatch: return "alpha-mismatch";
    case FindingKind::kLemmaPairMismatch: return "lemma-pair-mismatch";
    case FindingKind::kPipelineMismatch: return "pipeline-mismatch";
    case FindingKind::kBruteForceMismatch: return "brute-force-mismatch";
  }
  return "unknown";
}

VerificationReport verify_cell(JahangirParams p, const VerifyOptions& options) {
  VerificationReport report;
  report.params = p;
  report.regime = classify(p);
  const JahangirGraph j = build_jahangir(p);
  const DistanceMatrix d = all_pairs_distances(j.graph);
  const Graph srg = strong_resolving_graph(j.graph, d);
  const std::vector<Edge> computed = srg.edges();
  report.srg_edge_count = computed.size();

  const CoverResult alpha = exact_min_vertex_cover(srg, options.cover);
  report.alpha_computed = alpha.size;
  report.pipeline_sdim = sdim_via_cover(j.graph, options.cover).size;

  const bool main_regime =
      report.regime == JahangirRegime::kEvenMain || report.regime == JahangirRegime::kOddMain;
  if (report.regime == JahangirRegime::kExploratory) {
    report.notes.push_back("exploratory: no closed form applies, nothing compared to formulas");
  } else {
    report.formula_sdim = sdim_formula(p);
  }

  if (report.regime == JahangirRegime::kBaseCase) {
    const auto listed = predicted_srg_edges_base(p);
    compare_edges(j.labeling, to_vertex_edges(j.labeling, listed), computed, report);
  }

  if (main_regime) {
    const bool even = report.regime == JahangirRegime::kEvenMain;
    const EdgeFamilies families = even ? predicted_srg_edges_even(p) : predicted_srg_edges_odd(p);
    check_disjoint(families, report);
    const auto all = families.all();
    compare_edges(j.labeling, to_vertex_edges(j.labeling, all), computed, report);

    const auto cover_indices = even ? predicted_cover_even(p) : predicted_cover_odd(p);
    const VertexSet cover = to_vertex_set(j.labeling, cover_indices);
    const CoverCheck check = is_vertex_cover(srg, cover);
    report.predicted_cover_valid = check.ok;
    report.predicted_cover_size = cover.size();
    if (!check.ok) {
      report.discrepancies.push_back(
          {FindingKind::kPredictedCoverInvalid,
           "uncovered " + pair_name(j.labeling, *check.uncovered)});
    }
    if (cover.size() != alpha.size ||
        static_cast<int>(cover.size()) != report.formula_sdim.value_or(-1)) {
      report.discrepancies.push_back(
          {FindingKind::kPredictedCoverSize,
           "|S| = " + std::to_string(cover.size()) + ", alpha = " + std::to_string(alpha.size) +
               ", formula = " + optional_text(report.formula_sdim)});
    }

    bool lemmas_match = true;
    const auto lemmas = even ? std::vector{DistanceLemma::kEvenA, DistanceLemma::kEvenB,
                                           DistanceLemma::kEvenC}
                             : std::vector{DistanceLemma::kOddA, DistanceLemma::kOddB,
                                           DistanceLemma::kOddC};
    for (DistanceLemma lemma : lemmas) check_lemma(j, d, lemma, report, lemmas_match);
    report.lemma_pairs_match = lemmas_match;
    if (!even) report.notes.push_back(diametrical_note(j, d));
  }

  if (report.formula_sdim) {
    const auto formula = static_cast<std::size_t>(*report.formula_sdim);
    if (alpha.size != formula) {
      report.discrepancies.push_back(
          {FindingKind::kAlphaMismatch, "alpha = " + std::to_string(alpha.size) +
                                            ", formula = " + std::to_string(formula)});
    }
    if (report.pipeline_sdim != formula) {
      report.discrepancies.push_back(
          {FindingKind::kPipelineMismatch, "pipeline = " + std::to_string(report.pipeline_sdim) +
                                               ", formula = " + std::to_string(formula)});
    }
  }

  if (j.graph.order() <= std::min(options.brute_cap, kMaxBruteForceOrder)) {
    report.brute_force_sdim = brute_force_sdim(j.graph, options.brute_cap).size;
    if (*report.brute_force_sdim != report.pipeline_sdim) {
      report.discrepancies.push_back(
          {FindingKind::kBruteForceMismatch,
           "brute force = " + std::to_string(*report.brute_force_sdim) +
               ", pipeline = " + std::to_string(report.pipeline_sdim)});
    }
  }
  return report;
}

std::vector<VerificationReport> verify_grid(int n_lo, int n_hi, int m_lo, int m_hi,
                                            const VerifyOptions& options) {
  if (n_lo > n_hi || m_lo > m_hi) {
    throw Error(ErrorKind::kInvalidArgument, "empty parameter range");
  }
  validate({n_lo, m_lo});
  std::vector<VerificationReport> out;
  for (int n = n_lo; n <= n_hi; ++n)
    for (int m = m_lo; m <= m_hi; ++m) out.push_back(verify_cell({n, m}, options));
  return out;
}

std::string report_json(const VerificationReport& report) {
  return to_json_value(report).dump();
}

std::string reports_json(std::span<const VerificationReport> reports) {
  ordered_json doc = ordered_json::array();
  for (const auto& r : reports) doc.push_back(to_json_value(r));
  return doc.dump(2) + "\n";
}

std::string reports_table(std::span<const VerificationReport> reports) {
  std::ostringstream os;
  os << std::setw(4) << "n" << std::setw(4) << "m" << "  " << std::left << std::setw(12)
     << "regime" << std::right << std::setw(5) << "srg" << std::setw(7) << "cover"
     << std::setw(7) << "lemma" << std::setw(7) << "alpha" << std::setw(9) << "formula"
     << std::setw(10) << "pipeline" << std::setw(7) << "brute" << "  status\n";
  for (const auto& r : reports) {
    os << std::setw(4) << r.params.n << std::setw(4) << r.params.m << "  " << std::left
       << std::setw(12) << to_string(r.regime) << std::right << std::setw(5)
       << optional_text(r.srg_edges_match) << std::setw(7)
       << optional_text(r.predicted_cover_valid) << std::setw(7)
       << optional_text(r.lemma_pairs_match) << std::setw(7) << r.alpha_computed
       << std::setw(9) << optional_text(r.formula_sdim) << std::setw(10) << r.pipeline_sdim
       << std::setw(7) << optional_text(r.brute_force_sdim) << "  "
       << (r.passed() ? "PASS" : "FAIL") << "\n";
    for (const Finding& f : r.discrepancies) {
      os << "        " << to_string(f.kind) << ": " << f.detail << "\n";
    }
  }
  return os.str();
}

}  // namespace sdim
