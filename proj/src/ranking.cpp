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

#include "ppa/ranking.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>

#include "ppa/csv.hpp"
#include "ppa/error.hpp"

namespace ppa {

namespace {

double aggregate_values(std::vector<double> values, OptionAggregator agg) {
  switch (agg) {
    case OptionAggregator::kMean:
      return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    case OptionAggregator::kMin:
      return *std::min_element(values.begin(), values.end());
    case OptionAggregator::kMedian: {
      std::sort(values.begin(), values.end());
      const auto n = values.size();
      return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
    }
  }
  return 0.0;
}

}  // namespace

std::vector<Label> RankingSet::labels() const {
  std::vector<Label> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.label);
  return out;
}

std::optional<std::size_t> RankingSet::position_of(const Label& label) const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].label == label) return i;
  }
  return std::nullopt;
}

RankingSet top_k(const RankingSet& set, std::size_t k) {
  if (k < 1 || k > set.size()) {
    throw CriterionError("k must be in [1, " + std::to_string(set.size()) + "], got " + std::to_string(k));
  }
  return RankingSet{set.criterion, {set.entries.begin(), set.entries.begin() + static_cast<std::ptrdiff_t>(k)}};
}

std::string encode_ranking_csv(const RankingSet& set) {
  std::string out;
  csv::append_row(out, std::vector<std::string>{"rank", "config", "score"});
  for (std::size_t i = 0; i < set.entries.size(); ++i) {
    csv::append_row(out, std::vector<std::string>{std::to_string(i + 1), set.entries[i].label.str(),
                                                  format_double(set.entries[i].score)});
  }
  return out;
}

std::string_view to_string(OptionAggregator agg) {
  switch (agg) {
    case OptionAggregator::kMean: return "mean";
    case OptionAggregator::kMin: return "min";
    case OptionAggregator::kMedian: return "median";
  }
  return "?";
}

OptionAggregator parse_option_aggregator(std::string_view text) {
  if (text == "mean") return OptionAggregator::kMean;
  if (text == "min") return OptionAggregator::kMin;
  if (text == "median") return OptionAggregator::kMedian;
  throw CriterionError("unknown aggregator '" + std::string(text) + "' (mean|min|median)");
}

double SdScoreTable::score_of(std::string_view option) const {
  for (std::size_t i = 0; i < options.size(); ++i) {
    if (options[i] == option) return scores[i];
  }
  throw CriterionError("dimension '" + dimension + "' has no option '" + std::string(option) + "'");
}

SdScoreTable rank_scores(std::string dimension, std::vector<std::string> options,
                         std::vector<std::vector<std::size_t>> occurrences, std::size_t query_count) {
  const std::size_t d = options.size();
  if (d < 2) throw CriterionError("dimension '" + dimension + "' needs at least 2 options for rank scores");
  if (query_count == 0) throw CriterionError("rank scores need at least one query");
  if (occurrences.size() != d) throw CriterionError("occurrence table does not match option count");
  SdScoreTable table{std::move(dimension), std::move(options), std::move(occurrences), {}, query_count};
  for (const auto& row : table.occurrences) {
    if (row.size() != d) throw CriterionError("occurrence row must have one count per rank");
    if (std::accumulate(row.begin(), row.end(), std::size_t{0}) != query_count) {
      throw CriterionError("occurrences of an option must sum to the query count");
    }
    double weighted = 0.0;
    for (std::size_t r = 1; r <= d; ++r) weighted += static_cast<double>(row[r - 1] * (d - r));
    table.scores.push_back(weighted / (static_cast<double>(query_count) * static_cast<double>(d - 1)));
  }
  return table;
}

SdScoreTable sd_scores(const ResultMatrix& matrix, std::string_view dimension, OptionAggregator aggregator) {
  const auto& space = matrix.space();
  const auto dim_index = space.dimension_index(dimension);
  if (!dim_index) throw CriterionError("unknown dimension '" + std::string(dimension) + "'");
  const auto& dim = space.dimension(*dim_index);
  const std::size_t d = dim.options.size();
  if (d < 2) throw CriterionError("dimension '" + dim.name + "' needs at least 2 options for rank scores");

  std::vector<std::vector<std::size_t>> members(d);
  for (std::size_t c = 0; c < matrix.config_count(); ++c) {
    members[matrix.configs()[c].choices[*dim_index]].push_back(c);
  }
  for (std::size_t o = 0; o < d; ++o) {
    if (members[o].empty()) {
      throw CriterionError("option '" + dim.options[o] + "' of dimension '" + dim.name + "' has no measured configuration");
    }
  }

  std::vector<std::vector<std::size_t>> occurrences(d, std::vector<std::size_t>(d, 0));
  for (std::size_t q = 0; q < matrix.query_count(); ++q) {
    std::vector<double> value(d);
    for (std::size_t o = 0; o < d; ++o) {
      std::vector<double> runtimes;
      for (auto c : members[o]) runtimes.push_back(matrix.at(c, q));
      value[o] = aggregate_values(std::move(runtimes), aggregator);
    }
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return value[a] < value[b]; });
    for (std::size_t pos = 0; pos < d; ++pos) ++occurrences[order[pos]][pos];
  }
  return rank_scores(dim.name, dim.options, std::move(occurrences), matrix.query_count());
}

RankingSet sd_ranking_set(const ResultMatrix& matrix, const SdScoreTable& table) {
  const auto dim = matrix.space().dimension_index(table.dimension);
  if (!dim) throw CriterionError("unknown dimension '" + table.dimension + "'");
  struct Item {
    std::size_t config;
    double score;
    double mean;
  };
  std::vector<Item> items;
  for (std::size_t c = 0; c < matrix.config_count(); ++c) {
    items.push_back({c, table.score_of(matrix.space().option_of(matrix.configs()[c], *dim)), matrix.config_mean(c)});
  }
  std::sort(items.begin(), items.end(), [&](const Item& a, const Item& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.mean != b.mean) return a.mean < b.mean;
    return matrix.labels()[a.config] < matrix.labels()[b.config];
  });
  RankingSet out{"sd:" + table.dimension, {}};
  for (const auto& it : items) out.entries.push_back({matrix.labels()[it.config], it.score});
  return out;
}

RankingSet ranking_from_fronts(std::string criterion, const std::vector<Label>& labels, const ParetoResult& fronts) {
  std::vector<std::size_t> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) {
    if (fronts.front_of[a] != fronts.front_of[b]) return fronts.front_of[a] < fronts.front_of[b];
    if (fronts.crowding[a] != fronts.crowding[b]) return fronts.crowding[a] > fronts.crowding[b];
    return labels[a] < labels[b];
  });
  RankingSet out{std::move(criterion), {}};
  for (auto i : order) {
    out.entries.push_back({labels[i], 1.0 / (1.0 + static_cast<double>(fronts.front_of[i]))});
  }
  return out;
}

ParetoResult pareto_q_fronts(const ResultMatrix& matrix) {
  std::vector<std::vector<double>> objectives(matrix.config_count());
  for (std::size_t c = 0; c < matrix.config_count(); ++c) {
    for (std::size_t q = 0; q < matrix.query_count(); ++q) objectives[c].push_back(matrix.at(c, q));
  }
  return nondominated_sort(objectives, Sense::kMinimize);
}

RankingSet pareto_q(const ResultMatrix& matrix) {
  return ranking_from_fronts("pareto_q", matrix.labels(), pareto_q_fronts(matrix));
}

std::vector<std::vector<double>> pareto_agg_objectives(const ResultMatrix& matrix,
                                                       const std::vector<SdScoreTable>& tables) {
  const auto& space = matrix.space();
  if (tables.empty()) throw CriterionError("aggregated Pareto ranking needs at least one rank-score table");
  std::vector<std::size_t> dims;
  for (const auto& t : tables) {
    auto d = space.dimension_index(t.dimension);
    if (!d) throw CriterionError("unknown dimension '" + t.dimension + "'");
    dims.push_back(*d);
  }
  std::vector<std::vector<double>> objectives(matrix.config_count());
  for (std::size_t c = 0; c < matrix.config_count(); ++c) {
    for (std::size_t i = 0; i < tables.size(); ++i) {
      objectives[c].push_back(tables[i].score_of(space.option_of(matrix.configs()[c], dims[i])));
    }
  }
  return objectives;
}

RankingSet pareto_agg(const ResultMatrix& matrix, const std::vector<SdScoreTable>& tables) {
  auto fronts = nondominated_sort(pareto_agg_objectives(matrix, tables), Sense::kMaximize);
  return ranking_from_fronts("pareto_agg", matrix.labels(), fronts);
}

TriangleArea rta(double rs, double rp, double rf) {
  for (double s : {rs, rp, rf}) {
    if (!(s >= 0.0 && s <= 1.0)) throw CriterionError("rank scores must lie in [0, 1]");
  }
  // half of sin(120 degrees)
  const double half_sin = std::sin(2.0 * std::numbers::pi / 3.0) / 2.0;
  const double area = half_sin * (rf * rp + rs * rp + rf * rs);
  return {area, area / (half_sin * 3.0)};
}

RankingSet rta_ranking_set(const ResultMatrix& matrix, const std::vector<SdScoreTable>& tables) {
  if (tables.size() != 3) {
    throw CriterionError("triangle-area ranking needs exactly 3 dimensions, got " + std::to_string(tables.size()));
  }
  const auto& space = matrix.space();
  std::vector<std::size_t> dims;
  for (const auto& t : tables) {
    auto d = space.dimension_index(t.dimension);
    if (!d) throw CriterionError("unknown dimension '" + t.dimension + "'");
    dims.push_back(*d);
  }
  struct Item {
    std::size_t config;
    TriangleArea area;
  };
  std::vector<Item> items;
  for (std::size_t c = 0; c < matrix.config_count(); ++c) {
    const auto& cfg = matrix.configs()[c];
    items.push_back({c, rta(tables[0].score_of(space.option_of(cfg, dims[0])),
                            tables[1].score_of(space.option_of(cfg, dims[1])),
                            tables[2].score_of(space.option_of(cfg, dims[2])))});
  }
  std::sort(items.begin(), items.end(), [&](const Item& a, const Item& b) {
    if (a.area.area != b.area.area) return a.area.area > b.area.area;
    return matrix.labels()[a.config] < matrix.labels()[b.config];
  });
  RankingSet out{"rta", {}};
  for (const auto& it : items) out.entries.push_back({matrix.labels()[it.config], it.area.normalized});
  return out;
}

std::vector<SdScoreTable> all_sd_scores(const ResultMatrix& matrix, OptionAggregator aggregator) {
  std::vector<SdScoreTable> out;
  for (const auto& dim : matrix.space().dimensions()) {
    if (dim.options.size() >= 2) out.push_back(sd_scores(matrix, dim.name, aggregator));
  }
  return out;
}

}  // namespace ppa
