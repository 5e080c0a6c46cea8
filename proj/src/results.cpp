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

#include "ppa/results.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "ppa/csv.hpp"
#include "ppa/error.hpp"

namespace ppa {

ResultMatrix::ResultMatrix(ConfigSpace space, std::vector<Configuration> configs, std::vector<std::string> queries,
                           std::vector<double> runtime_ms)
    : space_(std::move(space)), configs_(std::move(configs)), queries_(std::move(queries)), data_(std::move(runtime_ms)) {
  if (configs_.empty()) throw MatrixError("result matrix has no configurations");
  if (queries_.empty()) throw MatrixError("result matrix has no queries");
  if (data_.size() != configs_.size() * queries_.size()) throw MatrixError("result matrix shape mismatch");
  for (double v : data_) {
    if (!(v > 0.0) || !std::isfinite(v)) throw MatrixError("result matrix runtimes must be positive");
  }
  // canonical enumeration order
  std::vector<std::size_t> perm(configs_.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](auto a, auto b) { return configs_[a] < configs_[b]; });
  std::vector<Configuration> sorted_configs;
  std::vector<double> sorted_data;
  for (auto p : perm) {
    if (!sorted_configs.empty() && sorted_configs.back() == configs_[p]) {
      throw MatrixError("duplicate configuration in result matrix");
    }
    sorted_configs.push_back(configs_[p]);
    sorted_data.insert(sorted_data.end(), data_.begin() + static_cast<std::ptrdiff_t>(p * queries_.size()),
                       data_.begin() + static_cast<std::ptrdiff_t>((p + 1) * queries_.size()));
  }
  configs_ = std::move(sorted_configs);
  data_ = std::move(sorted_data);
  labels_.reserve(configs_.size());
  for (const auto& c : configs_) labels_.push_back(encode_label(space_, c));
  std::vector<std::string> q = queries_;
  std::sort(q.begin(), q.end());
  if (std::adjacent_find(q.begin(), q.end()) != q.end()) throw MatrixError("duplicate query id in result matrix");
}

std::optional<std::size_t> ResultMatrix::index_of(const Label& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> ResultMatrix::index_of(const Configuration& config) const {
  auto it = std::lower_bound(configs_.begin(), configs_.end(), config);
  if (it == configs_.end() || *it != config) return std::nullopt;
  return static_cast<std::size_t>(it - configs_.begin());
}

double ResultMatrix::config_mean(std::size_t config) const {
  double sum = 0.0;
  for (std::size_t q = 0; q < queries_.size(); ++q) sum += at(config, q);
  return sum / static_cast<double>(queries_.size());
}

ResultMatrix ResultMatrix::restrict_to(const ConfigSpace& sub) const {
  std::vector<Configuration> kept;
  std::vector<double> data;
  for (std::size_t c = 0; c < configs_.size(); ++c) {
    auto mapped = translate(space_, configs_[c], sub);
    if (!mapped) continue;
    kept.push_back(std::move(*mapped));
    for (std::size_t q = 0; q < queries_.size(); ++q) data.push_back(at(c, q));
  }
  if (kept.empty()) throw MatrixError("no measured configuration falls inside the filtered space");
  return ResultMatrix(sub, std::move(kept), queries_, std::move(data));
}

ResultMatrix aggregate(const std::vector<LogRecord>& logs, const ConfigSpace& space, const AggregateOptions& options) {
  if (logs.empty()) throw MatrixError("no log records to aggregate");
  std::vector<std::string> queries;
  std::map<std::string, std::size_t> query_index;
  std::map<Configuration, std::vector<std::vector<std::pair<std::size_t, double>>>> cells;
  const std::string& dataset = logs.front().dataset;
  for (const auto& rec : logs) {
    if (rec.dataset != dataset) {
      throw MatrixError("log mixes datasets '" + dataset + "' and '" + rec.dataset + "'");
    }
    if (query_index.emplace(rec.query, queries.size()).second) queries.push_back(rec.query);
    Configuration config = decode_label(space, rec.config.str());
    cells[config];
  }
  for (auto& [config, per_query] : cells) per_query.resize(queries.size());
  for (const auto& rec : logs) {
    cells[decode_label(space, rec.config.str())][query_index[rec.query]].emplace_back(rec.run, rec.runtime_ms);
  }

  std::vector<Configuration> configs;
  std::vector<double> data;
  std::vector<std::string> gaps;
  for (auto& [config, per_query] : cells) {
    configs.push_back(config);
    for (std::size_t q = 0; q < queries.size(); ++q) {
      auto& runs = per_query[q];
      if (runs.empty()) {
        gaps.push_back("(" + encode_label(space, config).str() + ", " + queries[q] + ")");
        data.push_back(0.0);
        continue;
      }
      std::sort(runs.begin(), runs.end());
      std::size_t first = options.discard_first && runs.size() > 1 ? 1 : 0;
      double sum = 0.0;
      for (std::size_t i = first; i < runs.size(); ++i) sum += runs[i].second;
      data.push_back(sum / static_cast<double>(runs.size() - first));
    }
  }
  if (!gaps.empty()) {
    std::string msg = "missing results for " + std::to_string(gaps.size()) + " cell(s):";
    for (const auto& g : gaps) msg += " " + g;
    throw MatrixError(msg);
  }
  return ResultMatrix(space, std::move(configs), std::move(queries), std::move(data));
}

PerQueryRanking per_query_rankings(const ResultMatrix& matrix) {
  PerQueryRanking out;
  const auto n = matrix.config_count();
  for (std::size_t q = 0; q < matrix.query_count(); ++q) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) {
      if (matrix.at(a, q) != matrix.at(b, q)) return matrix.at(a, q) < matrix.at(b, q);
      return matrix.labels()[a] < matrix.labels()[b];
    });
    std::vector<std::size_t> rank(n);
    for (std::size_t pos = 0; pos < n; ++pos) rank[order[pos]] = pos + 1;
    out.order.push_back(std::move(order));
    out.rank.push_back(std::move(rank));
  }
  return out;
}

std::vector<Label> bottom_h(const ResultMatrix& matrix, const PerQueryRanking& ranking, std::size_t query,
                            std::size_t h) {
  if (query >= ranking.order.size()) throw MatrixError("query index out of range");
  const auto& order = ranking.order[query];
  if (h < 1 || h > order.size()) {
    throw MatrixError("h must be in [1, " + std::to_string(order.size()) + "], got " + std::to_string(h));
  }
  std::vector<Label> out;
  for (std::size_t i = 0; i < h; ++i) out.push_back(matrix.labels()[order[order.size() - 1 - i]]);
  return out;
}

std::string encode_matrix_csv(const ResultMatrix& matrix) {
  std::string out;
  std::vector<std::string> header{"config"};
  header.insert(header.end(), matrix.queries().begin(), matrix.queries().end());
  csv::append_row(out, header);
  for (std::size_t c = 0; c < matrix.config_count(); ++c) {
    std::vector<std::string> row{matrix.labels()[c].str()};
    for (std::size_t q = 0; q < matrix.query_count(); ++q) row.push_back(format_double(matrix.at(c, q)));
    csv::append_row(out, row);
  }
  return out;
}

}  // namespace ppa
