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
#include <vector>

#include "ppa/config_space.hpp"
#include "ppa/pareto.hpp"
#include "ppa/results.hpp"

namespace ppa {

struct RankedEntry {
  Label label;
  double score = 0.0;

  bool operator==(const RankedEntry&) const = default;
};

/// Total order of configurations under one criterion, best first.
struct RankingSet {
  std::string criterion;
  std::vector<RankedEntry> entries;

  std::size_t size() const noexcept { return entries.size(); }
  std::vector<Label> labels() const;
  /// 0-based position of a label, if present.
  std::optional<std::size_t> position_of(const Label& label) const;
};

/// The first k entries. Throws CriterionError unless 1 <= k <= size.
RankingSet top_k(const RankingSet& set, std::size_t k);

/// "rank,config,score" with 1-based ranks.
std::string encode_ranking_csv(const RankingSet& set);

/// How configurations sharing an option are folded into one runtime per query.
enum class OptionAggregator { kMean, kMin, kMedian };

std::string_view to_string(OptionAggregator agg);
OptionAggregator parse_option_aggregator(std::string_view text);

/// Rank-score table of one dimension: occurrences[o][r] counts how often
/// option o placed at rank r+1 across the queries.
struct SdScoreTable {
  std::string dimension;
  std::vector<std::string> options;
  std::vector<std::vector<std::size_t>> occurrences;
  std::vector<double> scores;
  std::size_t query_count = 0;

  std::size_t option_count() const noexcept { return options.size(); }
  /// Throws CriterionError for an unknown option.
  double score_of(std::string_view option) const;
};

/// R = sum_r O(r) * (d - r) / (|Q| * (d - 1)) for every option. Each
/// occurrence row must have d entries summing to `query_count`; d >= 2.
SdScoreTable rank_scores(std::string dimension, std::vector<std::string> options,
                         std::vector<std::vector<std::size_t>> occurrences, std::size_t query_count);

/// Per query, aggregates each option's runtime over the configurations that
/// use it, ranks the options ascending (ties: option order) and scores them.
/// Throws CriterionError when d < 2 or an option has no configuration.
SdScoreTable sd_scores(const ResultMatrix& matrix, std::string_view dimension,
                       OptionAggregator aggregator = OptionAggregator::kMean);

/// Configurations ordered by their option's score (desc), then mean runtime
/// across queries (asc), then label. Score = the option's R.
RankingSet sd_ranking_set(const ResultMatrix& matrix, const SdScoreTable& table);

/// Front index ascending, crowding distance descending, label ascending.
/// Score = 1 / (1 + front index).
RankingSet ranking_from_fronts(std::string criterion, const std::vector<Label>& labels, const ParetoResult& fronts);

/// Objectives = per-query mean runtimes, minimised.
RankingSet pareto_q(const ResultMatrix& matrix);
ParetoResult pareto_q_fronts(const ResultMatrix& matrix);

/// Objectives = option score of each configuration in every dimension,
/// maximised, one objective per table.
RankingSet pareto_agg(const ResultMatrix& matrix, const std::vector<SdScoreTable>& tables);
std::vector<std::vector<double>> pareto_agg_objectives(const ResultMatrix& matrix,
                                                       const std::vector<SdScoreTable>& tables);

struct TriangleArea {
  double area = 0.0;
  /// area relative to the all-ones triangle, in [0, 1].
  double normalized = 0.0;
};

/// Area spanned by three rank scores drawn on axes 120 degrees apart.
/// Throws CriterionError for scores outside [0, 1].
TriangleArea rta(double rs, double rp, double rf);

/// Requires exactly three dimension tables (space order). Ordered by area
/// descending, then label; score = normalized area.
RankingSet rta_ranking_set(const ResultMatrix& matrix, const std::vector<SdScoreTable>& tables);

/// One table per dimension with at least 2 options, in space order.
std::vector<SdScoreTable> all_sd_scores(const ResultMatrix& matrix,
                                        OptionAggregator aggregator = OptionAggregator::kMean);

}  // namespace ppa
