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
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ppa/criteria.hpp"
#include "ppa/evaluation.hpp"
#include "ppa/experiment_config.hpp"
#include "ppa/rdf.hpp"
#include "ppa/results.hpp"
#include "ppa/workload.hpp"

namespace ppa {

inline constexpr std::string_view kToolVersion = "0.1.0";

using ProgressFn = std::function<void(const std::string&)>;

/// `<out>/<dataset>/<schema>/<partitioning>/<format>`; "none" stands in for an
/// omitted partitioning dimension, "st" / "rows-csv" for omitted schema/storage.
std::filesystem::path config_data_dir(const ExperimentConfig& config, const std::filesystem::path& out,
                                      const Configuration& c);

struct PrepareSummary {
  std::vector<Label> prepared;
  std::vector<ConfigFailure> failures;
  ParseStats stats;
  std::vector<std::string> warnings;
};

/// Generates, partitions and serializes the tables of every configuration.
/// Per-configuration failures are collected; the rest continue.
PrepareSummary prepare_data(const ExperimentConfig& config, const std::filesystem::path& input,
                            const std::filesystem::path& out, ParseMode mode = ParseMode::kLenient,
                            const ProgressFn& progress = {});

/// Runs the selected workload over every prepared configuration and writes the log.
WorkloadRun run_experiment(const ExperimentConfig& config, const Workload& workload,
                           const std::filesystem::path& data_dir, const std::filesystem::path& log_path,
                           const ProgressFn& progress = {});

ResultMatrix load_matrix(const ExperimentConfig& config, const std::filesystem::path& log_path,
                         const AggregateOptions& options = {});

struct RankRequest {
  std::vector<std::string> criteria;
  std::size_t k = 3;
  CriterionOptions options;
  bool plots = true;
};

/// Every criterion applicable to the matrix's space: sd:<dim> for each
/// dimension with >= 2 options, pareto_q, pareto_agg, and rta for 3 dimensions.
std::vector<std::string> default_criteria(const ResultMatrix& matrix);

struct RankOutput {
  std::vector<RankingSet> sets;
  std::vector<std::filesystem::path> files;
};

/// Writes `<stem>.csv`, `<stem>_top<k>.md`, plots, and a combined
/// `top<k>.md` into `out`. Throws CriterionError when k exceeds the space.
RankOutput rank_matrix(const ResultMatrix& matrix, const RankRequest& request, const std::filesystem::path& out);

struct EvaluateRequest {
  std::vector<std::string> criteria;
  std::size_t k = 3;
  std::size_t h = 3;
  CoherenceMode mode = CoherenceMode::kPairwise;
  /// Compare only the first N entries of each ranking set (0 = whole sets).
  std::size_t coherence_top = 0;
  CriterionOptions options;
};

struct MetricRow {
  std::string criterion;
  std::string metric;  // "conformance" or "coherence"
  std::string datasets;
  double value = 0.0;
};

/// Conformance per (criterion, log) and coherence per (criterion, log pair).
/// All matrices must cover the same configurations.
std::vector<MetricRow> evaluate_matrices(const std::vector<std::string>& dataset_names,
                                         const std::vector<ResultMatrix>& matrices, const EvaluateRequest& request);

std::string encode_metrics_csv(const std::vector<MetricRow>& rows, const EvaluateRequest& request);
std::string encode_metrics_markdown(const std::vector<MetricRow>& rows, const EvaluateRequest& request);

struct Slice {
  std::string name;
  std::string expression;
};

/// Matrix CSV, per-query rankings, dimension-impact tables/plots for every
/// ordered dimension pair, and (when `dimension` is set) the filtered global
/// ranking table.
std::vector<std::filesystem::path> write_report(const ResultMatrix& matrix, const std::optional<std::string>& dimension,
                                                const std::vector<Slice>& slices, const std::filesystem::path& out,
                                                OptionAggregator aggregator = OptionAggregator::kMean);

/// Records inputs and stage outputs as `<out>/run_manifest.json`.
void write_run_manifest(const std::filesystem::path& out, const std::string& command,
                        const std::filesystem::path& config_path, const std::string& dataset,
                        const std::vector<std::filesystem::path>& outputs);

}  // namespace ppa
