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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ppa/config_space.hpp"
#include "ppa/schema.hpp"
#include "ppa/storage.hpp"

namespace ppa {

/// Which dimensions drive data preparation. Dimension names are matched
/// case-insensitively: schema|schemas, partition|partitions|partitioning,
/// storage|format|formats.
struct DimensionRoles {
  std::optional<std::size_t> schema;
  std::optional<std::size_t> partition;
  std::optional<std::size_t> storage;

  static DimensionRoles detect(const ConfigSpace& space);
};

/// Parsed experiment file:
///
///   dataset: watdiv-mini
///   dimensions:
///     schema: [st, vp, wpt, extvp]
///     partition: [horizontal, subject]   # or null to drop the dimension
///     storage: [csv, parquet]
///   query: 20                            # count, or explicit id list
///   runs: 5
///   exclude: {schema: [wpt]}             # optional filters
///   include: {...}
///   partitions: 4
///   storage_formats: {Avro: rows-csv}    # label -> native serializer
///   extvp: {join_kinds: [SS, OS, SO], selectivity_threshold: 1.0}
struct ExperimentConfig {
  std::string dataset = "dataset";
  /// Space as declared, without null dimensions.
  ConfigSpace declared;
  /// Space after include/exclude filters; this is what gets enumerated.
  ConfigSpace space;
  std::vector<std::string> omitted_dimensions;
  std::optional<std::size_t> query_count;
  std::vector<std::string> query_ids;
  std::size_t runs = 5;
  std::size_t partitions = 4;
  std::map<std::string, StorageFormat> storage_formats;
  ExtVpParams extvp;
  DimensionRoles roles;

  /// Native serializer bound to a storage option code.
  StorageFormat format_for(const std::string& option) const;
};

/// Throws ConfigFileError (or ConfigSpaceError for an invalid space).
ExperimentConfig parse_experiment_config(const std::string& yaml_text);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

}  // namespace ppa
