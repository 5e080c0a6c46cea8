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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ppa/rdf.hpp"

namespace ppa {

using Cell = std::optional<std::string>;
using Row = std::vector<Cell>;

/// A named relational table of nullable string cells.
struct RelTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<Row> rows;

  std::optional<std::size_t> column_index(std::string_view column) const;
  /// Throws SchemaError when a row width differs from the column count.
  void check_shape() const;

  bool operator==(const RelTable&) const = default;
};

enum class SchemaKind { kST, kVP, kWPT, kExtVP };

std::string_view to_string(SchemaKind kind);
/// Accepts st, vp, wpt, extvp (case-insensitive). "pt" throws SchemaError
/// because property-table generation is not supported.
SchemaKind parse_schema_kind(std::string_view code);

/// Ordered mapping from source key (predicate IRI, or "iri1|KIND|iri2" for
/// ExtVP tables) to the generated identifier. Injective.
using NameManifest = std::vector<std::pair<std::string, std::string>>;

struct SchemaSet {
  SchemaKind kind = SchemaKind::kST;
  std::vector<RelTable> tables;
  NameManifest name_manifest;

  const RelTable* find(std::string_view name) const;
  std::size_t total_rows() const;
};

enum class JoinKind { kSS, kOS, kSO };

std::string_view to_string(JoinKind kind);
JoinKind parse_join_kind(std::string_view text);

struct ExtVpParams {
  std::vector<JoinKind> join_kinds{JoinKind::kSS, JoinKind::kOS, JoinKind::kSO};
  /// Tables whose size ratio to their VP source exceeds this are dropped (only
  /// when below 1).
  double selectivity_threshold = 1.0;

  void validate() const;
};

/// Local name of an IRI: text after the last '/' or '#', non-alphanumerics
/// mapped to '_', a leading digit prefixed with '_'. Angle brackets are ignored.
std::string sanitize_name(std::string_view iri);

/// Assigns collision-free identifiers in first-seen order ("type", "type_1", ...).
class NameRegistry {
 public:
  /// Marks an identifier as taken without a manifest entry (e.g. the WPT "s" column).
  void reserve(std::string name);
  /// Identifier for `key`; repeated keys return their existing name.
  const std::string& assign(const std::string& key, std::string_view base);

  const NameManifest& manifest() const noexcept { return manifest_; }

 private:
  std::map<std::string, std::size_t> by_key_;
  std::map<std::string, bool> taken_;
  NameManifest manifest_;
};

/// Triples table (s, p, o), one row per triple in input order.
RelTable gen_st(const std::vector<Triple>& triples);

/// One (s, o) table per predicate, tables ordered by predicate IRI, rows in ST order.
SchemaSet gen_vp(const RelTable& st);

/// Single wide table "wpt": column s plus one column per predicate. Multi-valued
/// predicates are unnested in parallel and padded with nulls.
SchemaSet gen_wpt(const RelTable& st);

/// Semi-join reductions of the VP tables. Only the reduced tables are returned;
/// combine with the VP set to obtain a queryable ExtVP layout.
SchemaSet gen_extvp(const SchemaSet& vp, const ExtVpParams& params);

/// Builds the table set for one schema option.
SchemaSet build_schema(SchemaKind kind, const std::vector<Triple>& triples, const ExtVpParams& params);

}  // namespace ppa
