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

#include "ppa/partition.hpp"

#include <cctype>

#include "ppa/error.hpp"

namespace ppa {

std::string_view to_string(PartitionTechnique technique) {
  switch (technique) {
    case PartitionTechnique::kHorizontal: return "horizontal";
    case PartitionTechnique::kSubject: return "subject";
    case PartitionTechnique::kPredicate: return "predicate";
  }
  return "?";
}

PartitionTechnique parse_partition_technique(std::string_view code) {
  std::string c(code);
  for (auto& ch : c) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (c == "horizontal" || c == "hp") return PartitionTechnique::kHorizontal;
  if (c == "subject" || c == "sbp") return PartitionTechnique::kSubject;
  if (c == "predicate" || c == "pbp") return PartitionTechnique::kPredicate;
  throw PlanError("unknown partitioning technique '" + std::string(code) + "'");
}

std::size_t PartitionedTable::row_count() const {
  std::size_t n = 0;
  for (const auto& p : partitions) n += p.size();
  return n;
}

RelTable PartitionedTable::concatenated() const {
  RelTable t{source, columns, {}};
  t.rows.reserve(row_count());
  for (const auto& p : partitions) t.rows.insert(t.rows.end(), p.begin(), p.end());
  return t;
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

PartitionedTable partition(const RelTable& table, const PartitionPlan& plan) {
  if (plan.n == 0) throw PlanError("partition count must be at least 1");
  PartitionedTable out{table.name, table.columns, std::vector<std::vector<Row>>(plan.n)};

  if (plan.technique == PartitionTechnique::kHorizontal) {
    for (std::size_t i = 0; i < table.rows.size(); ++i) out.partitions[i % plan.n].push_back(table.rows[i]);
    return out;
  }

  // a fixed key sends the whole table to one bucket
  if (plan.fixed_key) {
    out.partitions[fnv1a64(*plan.fixed_key) % plan.n] = table.rows;
    return out;
  }
  if (plan.key_column.empty()) throw PlanError("hash partitioning of '" + table.name + "' needs a key");
  auto key = table.column_index(plan.key_column);
  if (!key) {
    throw PlanError("table '" + table.name + "' has no key column '" + plan.key_column + "'");
  }
  for (const auto& row : table.rows) {
    const auto& cell = row[*key];
    out.partitions[fnv1a64(cell ? std::string_view(*cell) : std::string_view()) % plan.n].push_back(row);
  }
  return out;
}

}  // namespace ppa
