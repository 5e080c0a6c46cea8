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

#include <charconv>
#include <chrono>
#include <optional>
#include <unordered_map>

#include "ppa/error.hpp"
#include "ppa/sql.hpp"

namespace ppa::sql {

namespace {

std::optional<double> as_number(std::string_view s) {
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

struct Bound {
  std::string alias;
  RelTable table;
};

struct Slot {
  std::size_t table;
  std::size_t column;
};

Slot resolve(const std::vector<Bound>& bound, const ColumnRef& ref) {
  if (!ref.qualifier.empty()) {
    for (std::size_t t = 0; t < bound.size(); ++t) {
      if (bound[t].alias != ref.qualifier) continue;
      auto col = bound[t].table.column_index(ref.column);
      if (!col) {
        throw SqlResolveError("table '" + bound[t].table.name + "' (alias '" + ref.qualifier +
                              "') has no column '" + ref.column + "'");
      }
      return {t, *col};
    }
    throw SqlResolveError("unknown alias '" + ref.qualifier + "'");
  }
  std::optional<Slot> found;
  for (std::size_t t = 0; t < bound.size(); ++t) {
    if (auto col = bound[t].table.column_index(ref.column)) {
      if (found) throw SqlResolveError("ambiguous column '" + ref.column + "'");
      found = Slot{t, *col};
    }
  }
  if (!found) throw SqlResolveError("unknown column '" + ref.column + "'");
  return *found;
}

}  // namespace

bool compare(const Cell& cell, CompareOp op, std::string_view literal) {
  if (!cell) return false;
  const std::string_view value(*cell);
  if (op == CompareOp::kEq) return value == literal;
  if (op == CompareOp::kNe) return value != literal;
  int cmp = 0;
  auto a = as_number(value);
  auto b = as_number(literal);
  if (a && b) cmp = *a < *b ? -1 : (*a > *b ? 1 : 0);
  else cmp = value.compare(literal) < 0 ? -1 : (value.compare(literal) > 0 ? 1 : 0);
  switch (op) {
    case CompareOp::kLt: return cmp < 0;
    case CompareOp::kLe: return cmp <= 0;
    case CompareOp::kGt: return cmp > 0;
    case CompareOp::kGe: return cmp >= 0;
    default: return false;
  }
}

MemorySource::MemorySource(const std::vector<RelTable>& tables) {
  for (const auto& t : tables) add(t);
}

void MemorySource::add(RelTable table) {
  auto name = table.name;
  tables_[name] = std::move(table);
}

RelTable MemorySource::load(const std::string& name) {
  auto it = tables_.find(name);
  if (it == tables_.end()) throw SqlResolveError("unknown table '" + name + "'");
  return it->second;
}

RelTable ManifestSource::load(const std::string& name) {
  if (manifest_.find(name) == nullptr) throw SqlResolveError("unknown table '" + name + "'");
  return read_table(manifest_, name);
}

QueryResult execute(const QueryAst& ast, TableSource& source) {
  check_aliases(ast);
  const auto start = std::chrono::steady_clock::now();

  std::vector<Bound> bound;
  std::unordered_map<std::string, std::size_t> loaded;
  auto bind = [&](const TableRef& ref) {
    if (auto it = loaded.find(ref.table); it != loaded.end()) {
      bound.push_back({ref.alias, bound[it->second].table});
    } else {
      loaded[ref.table] = bound.size();
      bound.push_back({ref.alias, source.load(ref.table)});
    }
  };
  bind(ast.base);
  for (const auto& j : ast.joins) bind(j.table);

  // scan with pushed-down filters
  std::vector<std::vector<std::pair<Slot, const Filter*>>> per_table(bound.size());
  for (const auto& f : ast.filters) {
    Slot s = resolve(bound, f.column);
    per_table[s.table].push_back({s, &f});
  }
  std::vector<std::vector<std::size_t>> survivors(bound.size());
  for (std::size_t t = 0; t < bound.size(); ++t) {
    const auto& rows = bound[t].table.rows;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      bool keep = true;
      for (const auto& [slot, filter] : per_table[t]) {
        if (!compare(rows[r][slot.column], filter->op, filter->literal)) {
          keep = false;
          break;
        }
      }
      if (keep) survivors[t].push_back(r);
    }
  }

  // tuples of row indices, one per bound table so far
  std::vector<std::vector<std::size_t>> tuples;
  tuples.reserve(survivors[0].size());
  for (auto r : survivors[0]) tuples.push_back({r});

  for (std::size_t j = 0; j < ast.joins.size(); ++j) {
    const std::size_t incoming = j + 1;
    Slot a = resolve(bound, ast.joins[j].left);
    Slot b = resolve(bound, ast.joins[j].right);
    if (a.table == incoming) std::swap(a, b);
    if (b.table != incoming || a.table >= incoming) {
      throw SqlResolveError("join condition for '" + ast.joins[j].table.alias +
                            "' must relate it to an earlier table");
    }
    const auto& right_rows = bound[incoming].table.rows;
    std::unordered_map<std::string_view, std::vector<std::size_t>> build;
    for (auto r : survivors[incoming]) {
      const auto& cell = right_rows[r][b.column];
      if (cell) build[*cell].push_back(r);
    }
    std::vector<std::vector<std::size_t>> next;
    for (const auto& tuple : tuples) {
      const auto& cell = bound[a.table].table.rows[tuple[a.table]][a.column];
      if (!cell) continue;
      auto hit = build.find(*cell);
      if (hit == build.end()) continue;
      for (auto r : hit->second) {
        auto extended = tuple;
        extended.push_back(r);
        next.push_back(std::move(extended));
      }
    }
    tuples = std::move(next);
  }

  QueryResult result;
  std::vector<Slot> out_slots;
  if (ast.star) {
    for (std::size_t t = 0; t < bound.size(); ++t) {
      for (std::size_t c = 0; c < bound[t].table.columns.size(); ++c) {
        out_slots.push_back({t, c});
        result.columns.push_back(bound[t].alias + "." + bound[t].table.columns[c]);
      }
    }
  } else {
    for (const auto& p : ast.projections) {
      out_slots.push_back(resolve(bound, p));
      result.columns.push_back(p.qualifier.empty() ? p.column : p.qualifier + "." + p.column);
    }
  }
  result.rows.reserve(tuples.size());
  for (const auto& tuple : tuples) {
    Row row;
    row.reserve(out_slots.size());
    for (const auto& s : out_slots) row.push_back(bound[s.table].table.rows[tuple[s.table]][s.column]);
    result.rows.push_back(std::move(row));
  }

  const auto stop = std::chrono::steady_clock::now();
  result.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return result;
}

}  // namespace ppa::sql
