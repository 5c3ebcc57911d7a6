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

#include "sdim/jahangir.hpp"
#include "sdim/strong_metric.hpp"

namespace sdim {

enum class FindingKind {
  kSrgEdgeMissing,      // predicted edge absent from the computed graph
  kSrgEdgeUnexpected,   // computed edge no family predicts
  kFamilyOverlap,       // an edge generated by two families
  kPredictedCoverInvalid,
  kPredictedCoverSize,  // |predicted cover| differs from alpha or the formula
  kAlphaMismatch,       // exact alpha differs from the formula
  kLemmaPairMismatch,
  kPipelineMismatch,    // pipeline sdim differs from the formula
  kBruteForceMismatch,  // brute force differs from the pipeline
};

std::string_view to_string(FindingKind kind);

struct Finding {
  FindingKind kind;
  std::string detail;
};

struct VerifyOptions {
  // Brute-force cross-check only runs when the order is at most this.
  std::size_t brute_cap = kDefaultBruteForceCap;
  CoverSolverOptions cover;
};

// Fields that have nothing to compare against for the given regime stay empty.
struct VerificationReport {
  JahangirParams params;
  JahangirRegime regime = JahangirRegime::kExploratory;
  std::optional<bool> srg_edges_match;
  std::optional<bool> predicted_cover_valid;
  std::optional<std::size_t> predicted_cover_size;
  std::optional<bool> lemma_pairs_match;
  std::size_t alpha_computed = 0;
  std::optional<int> formula_sdim;
  std::size_t pipeline_sdim = 0;
  std::optional<std::size_t> brute_force_sdim;
  std::size_t srg_edge_count = 0;
  std::vector<Finding> discrepancies;
  std::vector<std::string> notes;

  bool passed() const { return discrepancies.empty(); }
};

VerificationReport verify_cell(JahangirParams p, const VerifyOptions& options = {});

// Inclusive ranges; reports come back n-major, m-minor.
std::vector<VerificationReport> verify_grid(int n_lo, int n_hi, int m_lo, int m_hi,
                                            const VerifyOptions& options = {});

std::string report_json(const VerificationReport& report);
std::string reports_json(std::span<const VerificationReport> reports);
std::string reports_table(std::span<const VerificationReport> reports);

}  // namespace sdim
