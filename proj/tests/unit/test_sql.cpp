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

#include "doctest.h"

#include "oracles.hpp"
#include "ppa/error.hpp"
#include "ppa/partition.hpp"
#include "ppa/schema.hpp"
#include "ppa/sql.hpp"
#include "ppa/storage.hpp"

using namespace ppa;
using namespace ppa::sql;

namespace {

Triple tr(const std::string& s, const std::string& p, const std::string& o) {
  return {Term::iri(s), Term::iri("http://ex.org/" + p), Term::iri(o)};
}

// 12 triples, 3 predicates
std::vector<Triple> twelve() {
  return {tr("a", "knows", "b"), tr("b", "knows", "c"), tr("c", "knows", "a"), tr("a", "knows", "c"),
          tr("a", "name", "x"),  tr("b", "name", "y"),  tr("c", "name", "x"),  tr("d", "name", "z"),
          tr("a", "age", "30"),  tr("b", "age", "4"),   tr("c", "age", "12"),  tr("b", "knows", "d")};
}

std::map<std::string, RelTable> as_db(const SchemaSet& set) {
  std::map<std::string, RelTable> db;
  for (const auto& t : set.tables) db[t.name] = t;
  return db;
}

}  // namespace

TEST_CASE("parse star query") {
  const auto ast = parse_sql("SELECT * FROM st");
  CHECK(ast.star);
  CHECK(ast.base == TableRef{"st", "st"});
  CHECK(ast.joins.empty());
  CHECK(ast.filters.empty());
}

TEST_CASE("parse join with filter") {
  const auto ast = parse_sql("SELECT a.s FROM knows AS a JOIN name AS b ON a.o = b.s WHERE b.o = 'x'");
  QueryAst expect;
  expect.projections = {{"a", "s", 0}};
  expect.base = {"knows", "a"};
  expect.joins = {{{"name", "b"}, {"a", "o", 0}, {"b", "s", 0}}};
  expect.filters = {{{"b", "o", 0}, CompareOp::kEq, "x"}};
  CHECK(ast == expect);
}

TEST_CASE("keywords are case-insensitive; literals escape quotes") {
  const auto ast = parse_sql("select t.s, t.o from st t inner join st u on t.o = u.s where t.p <> 'it''s' and u.o >= 10");
  CHECK(ast.base.alias == "t");
  CHECK(ast.joins.size() == 1);
  REQUIRE(ast.filters.size() == 2);
  CHECK(ast.filters[0].op == CompareOp::kNe);
  CHECK(ast.filters[0].literal == "it's");
  CHECK(ast.filters[1].op == CompareOp::kGe);
  CHECK(ast.filters[1].literal == "10");
}

TEST_CASE("syntax errors carry byte offsets") {
  try {
    parse_sql("SELECT FROM");
    FAIL("accepted");
  } catch (const SqlSyntaxError& e) {
    CHECK(e.offset() == 7);
    CHECK(std::string(e.what()).find("offset 7") != std::string::npos);
  }
  for (const char* bad : {"", "SELECT", "SELECT * FROM", "SELECT a FROM t WHERE", "SELECT a FROM t WHERE a = ",
                          "SELECT a FROM t JOIN u", "SELECT a FROM t WHERE a = 'x", "SELECT a FROM t extra junk",
                          "SELECT a, FROM t", "SELECT a FROM t WHERE a ~ 1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_sql(bad), SqlSyntaxError);
  }
}

TEST_CASE("alias resolution") {
  CHECK_THROWS_AS(check_aliases(parse_sql("SELECT z.s FROM st AS a")), SqlResolveError);
  CHECK_THROWS_AS(check_aliases(parse_sql("SELECT a.s FROM st a JOIN st a ON a.s = a.o")), SqlResolveError);
  CHECK_NOTHROW(check_aliases(parse_sql("SELECT s FROM st")));
}

TEST_CASE("compare semantics") {
  CHECK(compare(Cell("4"), CompareOp::kLt, "12"));
  CHECK(compare(Cell("4"), CompareOp::kLt, "10.5"));
  CHECK(compare(Cell("abc"), CompareOp::kLt, "abd"));
  CHECK(compare(Cell("4"), CompareOp::kNe, "4.0"));
  CHECK_FALSE(compare(Cell("4"), CompareOp::kEq, "4.0"));
  CHECK(compare(Cell("4"), CompareOp::kGe, "4.0"));
  CHECK_FALSE(compare(std::nullopt, CompareOp::kNe, "x"));
  CHECK_FALSE(compare(std::nullopt, CompareOp::kEq, ""));
}

TEST_CASE("execution matches the nested-loop oracle") {
  const auto triples = twelve();
  const auto vp = build_schema(SchemaKind::kVP, triples, {});
  const auto st = build_schema(SchemaKind::kST, triples, {});
  const auto wpt = build_schema(SchemaKind::kWPT, triples, {});
  struct Case {
    const SchemaSet* set;
    const char* sql;
  };
  const std::vector<Case> cases{
      {&vp, "SELECT a.s, b.o FROM knows AS a JOIN name AS b ON a.o = b.s"},
      {&vp, "SELECT a.s FROM knows AS a JOIN name AS b ON a.o = b.s WHERE b.o = 'x'"},
      {&vp, "SELECT * FROM knows k JOIN knows k2 ON k.o = k2.s JOIN age g ON g.s = k2.o"},
      {&vp, "SELECT g.s FROM age g WHERE g.o < 13"},
      {&vp, "SELECT g.s FROM age g WHERE g.o > '13'"},
      {&vp, "SELECT n.s FROM name n WHERE n.o = 'nobody'"},
      {&vp, "SELECT o FROM name WHERE s != 'a'"},
      {&st, "SELECT t.s, u.o FROM st t JOIN st u ON t.o = u.s WHERE t.p = 'http://ex.org/knows' AND u.p = "
            "'http://ex.org/name'"},
      {&st, "SELECT * FROM st"},
      {&wpt, "SELECT w.s, w.name, v.age FROM wpt w JOIN wpt v ON w.knows = v.s WHERE v.age >= 5"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.sql);
    const auto ast = parse_sql(c.sql);
    MemorySource src(c.set->tables);
    const auto got = execute(ast, src);
    CHECK(oracle::sorted(got.rows) == oracle::sorted(oracle::nested_loop(ast, as_db(*c.set))));
    CHECK(got.elapsed_ms >= 0.0);
  }
}

TEST_CASE("zero-row filter and star column naming") {
  MemorySource src(build_schema(SchemaKind::kVP, twelve(), {}).tables);
  CHECK(execute(parse_sql("SELECT s FROM name WHERE o = 'nobody'"), src).rows.empty());
  const auto star = execute(parse_sql("SELECT * FROM knows k JOIN name n ON k.o = n.s"), src);
  CHECK(star.columns == std::vector<std::string>{"k.s", "k.o", "n.s", "n.o"});
}

TEST_CASE("resolve errors") {
  MemorySource src(build_schema(SchemaKind::kVP, twelve(), {}).tables);
  CHECK_THROWS_AS(execute(parse_sql("SELECT s FROM missing"), src), SqlResolveError);
  CHECK_THROWS_AS(execute(parse_sql("SELECT nope FROM name"), src), SqlResolveError);
  CHECK_THROWS_AS(execute(parse_sql("SELECT s FROM name n JOIN age a ON n.s = a.s"), src), SqlResolveError);
  CHECK_THROWS_AS(execute(parse_sql("SELECT n.s FROM name n JOIN age a ON n.s = n.o"), src), SqlResolveError);
}

TEST_CASE("storage formats and partitionings give identical results") {
  const auto vp = build_schema(SchemaKind::kVP, twelve(), {});
  const auto ast = parse_sql("SELECT a.s, b.o FROM knows AS a JOIN name AS b ON a.o = b.s");
  MemorySource mem(vp.tables);
  const auto expect = oracle::sorted(execute(ast, mem).rows);
  oracle::TempDir dir("sqlfmt");
  int k = 0;
  for (auto fmt : {StorageFormat::kRowsCsv, StorageFormat::kColsBin}) {
    for (auto tech : {PartitionTechnique::kHorizontal, PartitionTechnique::kSubject, PartitionTechnique::kPredicate}) {
      std::vector<PartitionedTable> parts;
      for (const auto& t : vp.tables) {
        PartitionPlan plan{tech, 3, "s", {}};
        if (tech == PartitionTechnique::kPredicate) plan.fixed_key = t.name;
        parts.push_back(partition(t, plan));
      }
      const auto manifest = write_tables(parts, fmt, dir.path() / std::to_string(k++));
      ManifestSource src(read_manifest(manifest.root));
      CHECK(oracle::sorted(execute(ast, src).rows) == expect);
    }
  }
}
