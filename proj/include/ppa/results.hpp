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
#include "ppa/workload.hpp"

namespace ppa {

/// Mean runtime (ms) per configuration and query. Configurations are kept in
/// enumeration order of their space; every cell is present and positive.
class ResultMatrix {
 public:
  ResultMatrix() = default;
  /// `runtime_ms` is row-major (configs x queries). Throws MatrixError.
  ResultMatrix(ConfigSpace space, std::vector<Configuration> configs, std::vector<std::string> queries,
               std::vector<double> runtime_ms);

  const ConfigSpace& space() const noexcept { return space_; }
  std::size_t config_count() const noexcept { return configs_.size(); }
  std::size_t query_count() const noexcept { return queries_.size(); }
  const std::vector<Configuration>& configs() const noexcept { return configs_; }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  const std::vector<std::string>& queries() const noexcept { return queries_; }

  double at(std::size_t config, std::size_t query) const { return data_[config * queries_.size() + query]; }
  std::optional<std::size_t> index_of(const Label& label) const;
  std::optional<std::size_t> index_of(const Configuration& config) const;
  /// Mean of a configuration's runtimes across queries.
  double config_mean(std::size_t config) const;

  /// Configurations that survive in `sub` (same dimension names, reduced
  /// options), relabelled in `sub`. Throws MatrixError when none survive.
  ResultMatrix restrict_to(const ConfigSpace& sub) const;

 private:
  ConfigSpace space_;
  std::vector<Configuration> configs_;
  std::vector<Label> labels_;
  std::vector<std::string> queries_;
  std::vector<double> data_;
};

struct AggregateOptions {
  /// Drop run 1 of every (config, query) when more than one run exists.
  bool discard_first = false;
};

/// Arithmetic mean of runtime_ms per (config, query). Queries keep their order
/// of first appearance. Throws MatrixError listing missing cells.
ResultMatrix aggregate(const std::vector<LogRecord>& logs, const ConfigSpace& space,
                       const AggregateOptions& options = {});

/// Configs sorted by ascending runtime for every query; ties go to the
/// lexicographically smaller label.
struct PerQueryRanking {
  /// order[q] = config indices, best first.
  std::vector<std::vector<std::size_t>> order;
  /// rank[q][c] = 1-based rank of config c on query q.
  std::vector<std::vector<std::size_t>> rank;
};

PerQueryRanking per_query_rankings(const ResultMatrix& matrix);

/// Labels of the h worst configurations for `query`, worst first.
/// Throws MatrixError when h is outside [1, config count].
std::vector<Label> bottom_h(const ResultMatrix& matrix, const PerQueryRanking& ranking, std::size_t query,
                            std::size_t h);

/// "config,<q1>,<q2>,..." followed by one row per configuration.
std::string encode_matrix_csv(const ResultMatrix& matrix);

}  // namespace ppa
