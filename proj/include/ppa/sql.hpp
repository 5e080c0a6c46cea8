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
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ppa/schema.hpp"
#include "ppa/storage.hpp"

namespace ppa::sql {

/// `qualifier.column`; the qualifier is empty when the query omitted it.
struct ColumnRef {
  std::string qualifier;
  std::string column;
  std::size_t offset = 0;

  bool operator==(const ColumnRef& o) const { return qualifier == o.qualifier && column == o.column; }
};

enum class CompareOp { kEq, kNe, kLt, kLe, kGt, kGe };

std::string_view to_string(CompareOp op);

struct TableRef {
  std::string table;
  std::string alias;  // equals `table` when no alias was given

  bool operator==(const TableRef&) const = default;
};

struct JoinClause {
  TableRef table;
  ColumnRef left;
  ColumnRef right;

  bool operator==(const JoinClause&) const = default;
};

struct Filter {
  ColumnRef column;
  CompareOp op = CompareOp::kEq;
  std::string literal;

  bool operator==(const Filter&) const = default;
};

struct QueryAst {
  bool star = false;
  std::vector<ColumnRef> projections;
  TableRef base;
  std::vector<JoinClause> joins;
  std::vector<Filter> filters;

  bool operator==(const QueryAst&) const = default;
};

/// SELECT <cols|*> FROM t [AS a] (JOIN t [AS a] ON x.c = y.c)* [WHERE c op lit (AND ...)*]
/// Keywords are case-insensitive; string literals use single quotes with ''
/// escapes; numeric literals may be unquoted. Throws SqlSyntaxError.
QueryAst parse_sql(std::string_view text);

/// Checks that every qualifier names a declared alias and that aliases are
/// unique. Throws SqlResolveError.
void check_aliases(const QueryAst& ast);

/// Filter comparison: = and != compare bytes; ordering operators compare
/// numerically when both sides parse as numbers, otherwise lexicographically.
/// A null cell never satisfies a filter.
bool compare(const Cell& cell, CompareOp op, std::string_view literal);

/// Supplies base tables to the executor.
class TableSource {
 public:
  virtual ~TableSource() = default;
  /// Throws SqlResolveError for an unknown table.
  virtual RelTable load(const std::string& name) = 0;
};

class MemorySource : public TableSource {
 public:
  MemorySource() = default;
  explicit MemorySource(const std::vector<RelTable>& tables);
  void add(RelTable table);
  RelTable load(const std::string& name) override;

 private:
  std::map<std::string, RelTable> tables_;
};

/// Reads partition files from disk on every load (no caching across queries).
class ManifestSource : public TableSource {
 public:
  explicit ManifestSource(StorageManifest manifest) : manifest_(std::move(manifest)) {}
  RelTable load(const std::string& name) override;

 private:
  StorageManifest manifest_;
};

struct QueryResult {
  std::vector<std::string> columns;
  std::vector<Row> rows;
  double elapsed_ms = 0.0;
};

/// Loads referenced tables, applies filters at scan, evaluates joins left to
/// right as hash joins (build side = newly joined table) and projects last.
/// Timing covers load, scan, join and projection.
QueryResult execute(const QueryAst& ast, TableSource& source);

}  // namespace ppa::sql
