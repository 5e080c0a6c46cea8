// Copyright 2026 The ppa Authors.
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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ppa/config_space.hpp"
#include "ppa/ranking.hpp"
#include "ppa/results.hpp"

namespace ppa {

/// 1 - (number of (query, top-k member) pairs where the member sits in that
/// query's bottom-h) / (|Q| * k). Throws EvaluationError for k or h out of range
/// or labels unknown to the matrix.
double conformance(const RankingSet& set, const ResultMatrix& matrix, std::size_t k, std::size_t h);

enum class CoherenceMode {
  /// Every unordered pair of distinct elements of the first set counts as a
  /// disagreement unless both elements occur in both sets with the same
  /// signed position difference.
  kPairwise,
  /// Fraction of positions naming different elements.
  kPositional,
};

std::string_view to_string(CoherenceMode mode);
CoherenceMode parse_coherence_mode(std::string_view text);

/// Distance in [0, 1] between two equally long ranking sets (0 = identical).
/// Throws EvaluationError on unequal lengths.
double coherence(const RankingSet& r1, const RankingSet& r2, CoherenceMode mode = CoherenceMode::kPairwise);

struct ReplicabilityGroup {
  std::string option;
  std::size_t cells = 0;
  std::size_t wins = 0;
  /// Empty when no comparable cell exists (reported as NA).
  std::optional<double> win_percent;
};

struct ReplicabilityReport {
  std::string dimension;
  std::string option_a;
  std::string option_b;
  std::string group_by;
  std::vector<ReplicabilityGroup> groups;
};

/// For each option g of `group_by`: over every (query, configuration using
/// option_a and g) whose counterpart with option_b exists, the percentage of
/// cells where option_a is strictly faster.
ReplicabilityReport replicability_pair(const ResultMatrix& matrix, std::string_view option_a,
                                       std::string_view option_b, std::string_view dimension,
                                       std::string_view group_by);

struct ImpactRow {
  std::string target_option;
  std::string varying_option;
  std::size_t cells = 0;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

/// Runtime summary per (target option, varying option) over queries and all
/// residual options. Combinations without measured configurations are omitted.
std::vector<ImpactRow> dimension_impact(const ResultMatrix& matrix, std::string_view target_dimension,
                                        std::string_view varying_dimension);

struct NamedFilter {
  std::string name;
  SpaceFilter filter;
};

struct GlobalRankingColumn {
  std::string name;
  std::optional<SdScoreTable> table;
  /// Why the column could not be computed (table empty).
  std::string error;
};

/// Rank scores of `dimension` recomputed on each filtered slice of the matrix.
std::vector<GlobalRankingColumn> global_ranking_table(const ResultMatrix& matrix, std::string_view dimension,
                                                      const std::vector<NamedFilter>& filters,
                                                      OptionAggregator aggregator = OptionAggregator::kMean);

/// Parses "dim=opt1|opt2" (include) and "dim!=opt" (exclude) clauses joined by
/// ';'. Throws EvaluationError on malformed text.
SpaceFilter parse_filter_expression(std::string_view text);

std::string encode_replicability_csv(const ReplicabilityReport& report);
std::string encode_replicability_markdown(const ReplicabilityReport& report);
std::string encode_impact_csv(const std::vector<ImpactRow>& rows, std::string_view target_dimension,
                              std::string_view varying_dimension);
std::string encode_global_ranking_csv(const ResultMatrix& matrix, std::string_view dimension,
                                      const std::vector<GlobalRankingColumn>& columns);
std::string encode_global_ranking_markdown(const ResultMatrix& matrix, std::string_view dimension,
                                           const std::vector<GlobalRankingColumn>& columns);

/// Fixed two-decimal rendering used by the markdown reports.
std::string two_decimals(double value);

}  // namespace ppa
