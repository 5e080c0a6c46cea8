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
#include <string>
#include <string_view>
#include <vector>

#include "ppa/partition.hpp"
#include "ppa/schema.hpp"

namespace ppa {

/// Native serializers standing in for row-oriented and columnar file formats.
enum class StorageFormat { kRowsCsv, kColsBin };

std::string_view to_string(StorageFormat format);
/// Canonical names ("rows-csv", "cols-bin") plus common aliases: csv/avro map
/// to rows-csv, orc/parquet/pcol to cols-bin (case-insensitive).
StorageFormat parse_storage_format(std::string_view name);
std::string_view file_extension(StorageFormat format);

/// Header row plus one record per row; null is an empty unquoted field.
std::string encode_rows_csv(const RelTable& table);
RelTable decode_rows_csv(std::string_view data, std::string name);

/// Layout (little-endian): "PCOL1", u32 column count, then per column u16 name
/// length, name bytes, u32 row count and that many u32-length-prefixed values;
/// length 0xFFFFFFFF encodes null.
std::string encode_cols_bin(const RelTable& table);
RelTable decode_cols_bin(std::string_view data, std::string name);

std::string encode_table(const RelTable& table, StorageFormat format);
RelTable decode_table(std::string_view data, StorageFormat format, std::string name);

struct StorageEntry {
  std::string table;
  StorageFormat format = StorageFormat::kRowsCsv;
  /// Partition files relative to the manifest directory, in partition order.
  std::vector<std::string> files;
  std::vector<std::size_t> rows;

  std::size_t total_rows() const;
};

struct StorageManifest {
  std::filesystem::path root;
  std::vector<StorageEntry> entries;

  const StorageEntry* find(std::string_view table) const;
};

/// Writes `<dir>/<table>/part-<k>.<ext>` for every partition (empty ones included).
StorageEntry write_partitioned(const PartitionedTable& table, StorageFormat format,
                               const std::filesystem::path& dir);

/// Writes all tables and `<dir>/manifest.csv`.
StorageManifest write_tables(const std::vector<PartitionedTable>& tables, StorageFormat format,
                             const std::filesystem::path& dir);

void write_manifest_file(const StorageManifest& manifest);
/// Loads `<dir>/manifest.csv`; throws StorageError when absent or malformed.
StorageManifest read_manifest(const std::filesystem::path& dir);

PartitionedTable read_partitioned(const StorageManifest& manifest, std::string_view table);
/// All partitions of a table concatenated in partition order.
RelTable read_table(const StorageManifest& manifest, std::string_view table);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view data);

}  // namespace ppa
