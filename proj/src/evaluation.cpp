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

#include "ppa/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <map>
#include <set>

#include "ppa/csv.hpp"
#include "ppa/error.hpp"

namespace ppa {

namespace {

std::size_t dimension_or_throw(const ConfigSpace& space, std::string_view name) {
  auto d = space.dimension_index(name);
  if (!d) throw EvaluationError("unknown dimension '" + std::string(name) + "'");
  return *d;
}

std::size_t option_or_throw(const ConfigSpace& space, std::size_t dim, std::string_view option) {
  auto o = space.dimension(dim).option_index(option);
  if (!o) {
    throw EvaluationError("dimension '" + space.dimension(dim).name + "' has no option '" + std::string(option) + "'");
  }
  return *o;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::string two_decimals(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

double conformance(const RankingSet& set, const ResultMatrix& matrix, std::size_t k, std::size_t h) {
  if (k < 1 || k > set.size()) {
    throw EvaluationError("k must be in [1, " + std::to_string(set.size()) + "], got " + std::to_string(k));
  }
  if (h < 1 || h > matrix.config_count()) {
    throw EvaluationError("h must be in [1, " + std::to_string(matrix.config_count()) + "], got " + std::to_string(h));
  }
  const auto ranking = per_query_rankings(matrix);
  std::vector<std::size_t> top;
  for (std::size_t j = 0; j < k; ++j) {
    auto idx = matrix.index_of(set.entries[j].label);
    if (!idx) throw EvaluationError("ranked configuration '" + set.entries[j].label.str() + "' is not in the matrix");
    top.push_back(*idx);
  }
  const std::size_t n = matrix.config_count();
  std::size_t hits = 0;
  for (std::size_t q = 0; q < matrix.query_count(); ++q) {
    for (auto c : top) {
      // bottom-h of query q = ranks n-h+1 .. n
      if (ranking.rank[q][c] > n - h) ++hits;
    }
  }
  return 1.0 - static_cast<double>(hits) / (static_cast<double>(matrix.query_count()) * static_cast<double>(k));
}

std::string_view to_string(CoherenceMode mode) { return mode == CoherenceMode::kPairwise ? "pairwise" : "positional"; }

CoherenceMode parse_coherence_mode(std::string_view text) {
  if (text == "pairwise") return CoherenceMode::kPairwise;
  if (text == "positional") return CoherenceMode::kPositional;
  throw EvaluationError("unknown coherence mode '" + std::string(text) + "' (pairwise|positional)");
}

double coherence(const RankingSet& r1, const RankingSet& r2, CoherenceMode mode) {
  if (r1.size() != r2.size()) {
    throw EvaluationError("coherence needs ranking sets of equal length (" + std::to_string(r1.size()) + " vs " +
                          std::to_string(r2.size()) + ")");
  }
  const std::size_t n = r1.size();
  if (n == 0) return 0.0;
  std::size_t positional = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (r1.entries[i].label != r2.entries[i].label) ++positional;
  }
  const double positional_distance = static_cast<double>(positional) / static_cast<double>(n);
  if (mode == CoherenceMode::kPositional || n < 2) return positional_distance;

  std::map<Label, std::size_t> pos2;
  for (std::size_t i = 0; i < n; ++i) pos2.emplace(r2.entries[i].label, i);
  std::size_t disagreements = 0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ++pairs;
      auto a = pos2.find(r1.entries[i].label);
      auto b = pos2.find(r1.entries[j].label);
      if (a == pos2.end() || b == pos2.end()) {
        ++disagreements;
        continue;
      }
      const auto d1 = static_cast<long long>(i) - static_cast<long long>(j);
      const auto d2 = static_cast<long long>(a->second) - static_cast<long long>(b->second);
      if (d1 != d2) ++disagreements;
    }
  }
  return static_cast<double>(disagreements) / static_cast<double>(pairs);
}

ReplicabilityReport replicability_pair(const ResultMatrix& matrix, std::string_view option_a,
                                       std::string_view option_b, std::string_view dimension,
                                       std::string_view group_by) {
  const auto& space = matrix.space();
  const auto dim = dimension_or_throw(space, dimension);
  const auto group_dim = dimension_or_throw(space, group_by);
  if (dim == group_dim) throw EvaluationError("grouping dimension must differ from the compared dimension");
  const auto a = option_or_throw(space, dim, option_a);
  const auto b = option_or_throw(space, dim, option_b);

  ReplicabilityReport report{std::string(dimension), std::string(option_a), std::string(option_b),
                             std::string(group_by), {}};
  for (std::size_t g = 0; g < space.dimension(group_dim).options.size(); ++g) {
    ReplicabilityGroup group{space.dimension(group_dim).options[g], 0, 0, std::nullopt};
    for (std::size_t c = 0; c < matrix.config_count(); ++c) {
      const auto& cfg = matrix.configs()[c];
      if (cfg.choices[dim] != a || cfg.choices[group_dim] != g) continue;
      Configuration other = cfg;
      other.choices[dim] = b;
      auto counterpart = matrix.index_of(other);
      if (!counterpart) continue;
      for (std::size_t q = 0; q < matrix.query_count(); ++q) {
        ++group.cells;
        if (matrix.at(c, q) < matrix.at(*counterpart, q)) ++group.wins;
      }
    }
    if (group.cells > 0) {
      group.win_percent = 100.0 * static_cast<double>(group.wins) / static_cast<double>(group.cells);
    }
    report.groups.push_back(std::move(group));
  }
  return report;
}

std::vector<ImpactRow> dimension_impact(const ResultMatrix& matrix, std::string_view target_dimension,
                                        std::string_view varying_dimension) {
  const auto& space = matrix.space();
  const auto target = dimension_or_throw(space, target_dimension);
  const auto varying = dimension_or_throw(space, varying_dimension);
  if (target == varying) throw EvaluationError("impact needs two distinct dimensions");
  std::vector<ImpactRow> out;
  for (std::size_t t = 0; t < space.dimension(target).options.size(); ++t) {
    for (std::size_t v = 0; v < space.dimension(varying).options.size(); ++v) {
      ImpactRow row{space.dimension(target).options[t], space.dimension(varying).options[v], 0, 0.0,
                    std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
      double sum = 0.0;
      for (std::size_t c = 0; c < matrix.config_count(); ++c) {
        const auto& cfg = matrix.configs()[c];
        if (cfg.choices[target] != t || cfg.choices[varying] != v) continue;
        for (std::size_t q = 0; q < matrix.query_count(); ++q) {
          const double x = matrix.at(c, q);
          ++row.cells;
          sum += x;
          row.min = std::min(row.min, x);
          row.max = std::max(row.max, x);
        }
      }
      if (row.cells == 0) continue;
      row.mean = sum / static_cast<double>(row.cells);
      out.push_back(std::move(row));
    }
  }
  return out;
}

std::vector<GlobalRankingColumn> global_ranking_table(const ResultMatrix& matrix, std::string_view dimension,
                                                      const std::vector<NamedFilter>& filters,
                                                      OptionAggregator aggregator) {
  dimension_or_throw(matrix.space(), dimension);
  std::vector<GlobalRankingColumn> out;
  for (const auto& f : filters) {
    GlobalRankingColumn col{f.name, std::nullopt, {}};
    try {
      if (f.filter.remove.count(std::string(dimension))) {
        throw EvaluationError("filter removes the ranked dimension");
      }
      if (!f.filter.remove.empty()) {
        throw EvaluationError("measured results cannot drop a whole dimension");
      }
      validate_filter(matrix.space(), f.filter);
      const ConfigSpace sub = f.filter.empty() ? matrix.space() : filter_space(matrix.space(), f.filter);
      const ResultMatrix slice = f.filter.empty() ? matrix : matrix.restrict_to(sub);
      col.table = sd_scores(slice, dimension, aggregator);
    } catch (const Error& e) {
      col.error = e.what();
    }
    out.push_back(std::move(col));
  }
  return out;
}

SpaceFilter parse_filter_expression(std::string_view text) {
  SpaceFilter filter;
  if (trim(text).empty()) return filter;
  for (const auto& clause : split(text, ';')) {
    if (clause.empty()) continue;
    const auto ne = clause.find("!=");
    const auto eq = clause.find('=');
    if (eq == std::string::npos) throw EvaluationError("filter clause '" + clause + "' needs '=' or '!='");
    const bool exclude = ne != std::string::npos && ne < eq;
    const auto name = trim(std::string_view(clause).substr(0, exclude ? ne : eq));
    const auto values = split(std::string_view(clause).substr(eq + 1), '|');
    if (name.empty() || values.empty() || std::any_of(values.begin(), values.end(), [](auto& v) { return v.empty(); })) {
      throw EvaluationError("malformed filter clause '" + clause + "'");
    }
    auto& target = exclude ? filter.exclude[name] : filter.include[name];
    target.insert(target.end(), values.begin(), values.end());
  }
  return filter;
}

std::string encode_replicability_csv(const ReplicabilityReport& report) {
  std::string out;
  csv::append_row(out, std::vector<std::string>{"dimension", "option_a", "option_b", "group_by", "group", "cells",
                                                "wins", "win_percent"});
  for (const auto& g : report.groups) {
    csv::append_row(out, std::vector<std::string>{report.dimension, report.option_a, report.option_b, report.group_by,
                                                  g.option, std::to_string(g.cells), std::to_string(g.wins),
                                                  g.win_percent ? format_double(*g.win_percent) : "NA"});
  }
  return out;
}

std::string encode_replicability_markdown(const ReplicabilityReport& report) {
  std::string out = "| " + report.option_a + " vs " + report.option_b + " |";
  std::string rule = "|---|";
  std::string values = "| win % |";
  for (const auto& g : report.groups) {
    out += " " + g.option + " |";
    rule += "---:|";
    values += " " + (g.win_percent ? two_decimals(*g.win_percent) : std::string("NA")) + " |";
  }
  return out + "\n" + rule + "\n" + values + "\n";
}

std::string encode_impact_csv(const std::vector<ImpactRow>& rows, std::string_view target_dimension,
                              std::string_view varying_dimension) {
  std::string out;
  csv::append_row(out, std::vector<std::string>{std::string(target_dimension), std::string(varying_dimension),
                                                "cells", "mean_ms", "min_ms", "max_ms"});
  for (const auto& r : rows) {
    csv::append_row(out, std::vector<std::string>{r.target_option, r.varying_option, std::to_string(r.cells),
                                                  format_double(r.mean), format_double(r.min), format_double(r.max)});
  }
  return out;
}

std::string encode_global_ranking_csv(const ResultMatrix& matrix, std::string_view dimension,
                                      const std::vector<GlobalRankingColumn>& columns) {
  const auto& dim = matrix.space().dimension(dimension_or_throw(matrix.space(), dimension));
  std::string out;
  std::vector<std::string> header{std::string(dimension)};
  for (const auto& c : columns) header.push_back(c.name);
  csv::append_row(out, header);
  for (const auto& opt : dim.options) {
    std::vector<std::string> row{opt};
    for (const auto& c : columns) {
      if (!c.table) {
        row.push_back("NA");
        continue;
      }
      auto it = std::find(c.table->options.begin(), c.table->options.end(), opt);
      row.push_back(it == c.table->options.end()
                        ? "NA"
                        : format_double(c.table->scores[static_cast<std::size_t>(it - c.table->options.begin())]));
    }
    csv::append_row(out, row);
  }
  return out;
}

std::string encode_global_ranking_markdown(const ResultMatrix& matrix, std::string_view dimension,
                                           const std::vector<GlobalRankingColumn>& columns) {
  const auto& dim = matrix.space().dimension(dimension_or_throw(matrix.space(), dimension));
  std::string out = "| " + std::string(dimension) + " |";
  std::string rule = "|---|";
  for (const auto& c : columns) {
    out += " " + c.name + " |";
    rule += "---:|";
  }
  out += "\n" + rule + "\n";
  for (const auto& opt : dim.options) {
    out += "| " + opt + " |";
    for (const auto& c : columns) {
      std::string cell = "NA";
      if (c.table) {
        auto it = std::find(c.table->options.begin(), c.table->options.end(), opt);
        if (it != c.table->options.end()) {
          cell = two_decimals(c.table->scores[static_cast<std::size_t>(it - c.table->options.begin())]);
        }
      }
      out += " " + cell + " |";
    }
    out += "\n";
  }
  for (const auto& c : columns) {
    if (!c.table) out += "\n" + c.name + ": " + c.error + "\n";
  }
  return out;
}

}  // namespace ppa
