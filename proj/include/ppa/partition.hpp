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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ppa/schema.hpp"

namespace ppa {

enum class PartitionTechnique { kHorizontal, kSubject, kPredicate };

std::string_view to_string(PartitionTechnique technique);
/// Accepts horizontal/hp, subject/sbp, predicate/pbp (case-insensitive).
PartitionTechnique parse_partition_technique(std::string_view code);

struct PartitionPlan {
  PartitionTechnique technique = PartitionTechnique::kHorizontal;
  std::size_t n = 1;
  /// Hash key column for subject/predicate partitioning.
  std::string key_column;
  /// When set every row hashes this value instead of key_column,
  /// e.g. the source predicate of a VP table under predicate partitioning.
  std::optional<std::string> fixed_key;
};

struct PartitionedTable {
  std::string source;
  std::vector<std::string> columns;
  std::vector<std::vector<Row>> partitions;

  std::size_t row_count() const;
  /// Rows of all partitions in partition order.
  RelTable concatenated() const;

  bool operator==(const PartitionedTable&) const = default;
};

/// 64-bit FNV-1a over raw bytes.
std::uint64_t fnv1a64(std::string_view bytes) noexcept;

/// Horizontal partitioning sends row i to partition i mod n; subject and
/// predicate partitioning send a row to fnv1a64(key) mod n (null keys hash as
/// the empty string). Throws PlanError for n == 0 or a missing key column.
PartitionedTable partition(const RelTable& table, const PartitionPlan& plan);

}  // namespace ppa
