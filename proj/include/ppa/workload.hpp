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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ppa/config_space.hpp"
#include "ppa/storage.hpp"

namespace ppa {

/// Query texts per query id. An entry is either one SQL string shared by all
/// schema options or a map keyed by schema option code.
class Workload {
 public:
  /// Parses `queries: {<id>: {<schema option>: "<SQL>"}}`. Throws ConfigFileError.
  static Workload parse(const std::string& yaml_text);
  static Workload load(const std::filesystem::path& path);

  const std::vector<std::string>& query_ids() const noexcept { return ids_; }
  bool has_query(std::string_view id) const;
  /// Throws ConfigFileError when no text exists for the id/option pair.
  const std::string& sql_for(std::string_view id, std::string_view schema_option) const;

  /// Ids selected by the experiment: explicit ids, the first `count` ids, or all.
  std::vector<std::string> select(const std::vector<std::string>& ids, std::optional<std::size_t> count) const;
  /// Every id must have SQL for every schema option.
  void validate(const std::vector<std::string>& ids, const std::vector<std::string>& schema_options) const;

 private:
  struct Entry {
    std::string shared;
    std::map<std::string, std::string> per_schema;
  };
  std::vector<std::string> ids_;
  std::map<std::string, Entry, std::less<>> entries_;
};

/// One timed query execution.
struct LogRecord {
  std::string dataset;
  Label config;
  std::string query;
  std::size_t run = 1;
  double runtime_ms = 0.0;

  bool operator==(const LogRecord&) const = default;
};

inline constexpr std::string_view kLogHeader = "dataset,config,query,run,runtime_ms";

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double value);

std::string encode_log_csv(const std::vector<LogRecord>& records);
void write_log_file(const std::filesystem::path& path, const std::vector<LogRecord>& records);

/// Parses a log with the exact header above; every label must decode in
/// `space` and every runtime must be positive. Throws LogError naming the
/// 1-based data row.
std::vector<LogRecord> ingest_logs(std::string_view csv_text, const ConfigSpace& space);
std::vector<LogRecord> ingest_log_file(const std::filesystem::path& path, const ConfigSpace& space);

struct ConfigFailure {
  Label config;
  std::string message;
};

struct QueryOutcome {
  Label config;
  std::string query;
  std::size_t result_rows = 0;
};

struct WorkloadRun {
  std::vector<LogRecord> records;
  std::vector<ConfigFailure> failures;
  std::vector<QueryOutcome> outcomes;
};

struct RunOptions {
  std::string dataset;
  std::size_t runs = 5;
  std::function<void(const std::string&)> progress;
};

/// Locates prepared data for a configuration; throws when it is missing.
using ManifestProvider = std::function<StorageManifest(const Configuration&)>;

/// For every configuration (enumeration order) and query: `runs` serial
/// executions, one record each. A configuration whose data or queries fail is
/// recorded in `failures` and contributes no records.
WorkloadRun run_workload(const Workload& workload, const std::vector<std::string>& query_ids,
                         const ConfigSpace& space, std::optional<std::size_t> schema_dimension,
                         const ManifestProvider& manifests, const RunOptions& options);

}  // namespace ppa
