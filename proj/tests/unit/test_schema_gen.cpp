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

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"
#include "ppa/error.hpp"
#include "ppa/schema.hpp"

using namespace ppa;

namespace {

Triple tr(const std::string& s, const std::string& p, const Term& o) { return {Term::iri(s), Term::iri(p), o}; }

std::vector<Triple> six() {
  return {tr("s1", "http://ex.org/p1", Term::literal("v")),
          tr("s1", "http://ex.org/p2", Term::iri("s2")),
          tr("s2", "http://ex.org/p1", Term::literal("w", "", "en")),
          tr("s2", "http://ex.org/p3", Term::literal("7", "http://www.w3.org/2001/XMLSchema#int")),
          {Term::blank("b0"), Term::iri("http://ex.org/p2"), Term::blank("b1")},
          tr("s3", "http://ex.org/p1", Term::literal("v"))};
}

std::multiset<Row> as_multiset(const std::vector<Row>& rows) { return {rows.begin(), rows.end()}; }

}  // namespace

TEST_CASE("sanitize_name") {
  CHECK(sanitize_name("http://ex.org/knows") == "knows");
  CHECK(sanitize_name("<http://ex.org/knows>") == "knows");
  CHECK(sanitize_name("http://ex.org/has-name") == "has_name");
  CHECK(sanitize_name("http://www.w3.org/1999/02/22-rdf-syntax-ns#type") == "type");
  CHECK(sanitize_name("http://ex.org/3d") == "_3d");
  CHECK(sanitize_name("http://ex.org/") == "http___ex_org_");
}

TEST_CASE("name collisions get numeric suffixes in first-seen order") {
  NameRegistry reg;
  CHECK(reg.assign("http://a.org/type", "type") == "type");
  CHECK(reg.assign("http://b.org/type", "type") == "type_1");
  CHECK(reg.assign("http://c.org#type", "type") == "type_2");
  CHECK(reg.assign("http://a.org/type", "type") == "type");
  CHECK(reg.manifest().size() == 3);
}

TEST_CASE("gen_st") {
  CHECK(gen_st({}).rows.empty());
  const auto st = gen_st(six());
  CHECK(st.columns == std::vector<std::string>{"s", "p", "o"});
  REQUIRE(st.rows.size() == 6);
  CHECK(st.rows[0] == Row{"s1", "http://ex.org/p1", "v"});
  CHECK(st.rows[2][2] == "w");
  CHECK(st.rows[3][2] == "7");
  CHECK(st.rows[4] == Row{"_:b0", "http://ex.org/p2", "_:b1"});
  // duplicates are kept
  CHECK(gen_st({six()[0], six()[0]}).rows.size() == 2);
}

TEST_CASE("gen_vp groups by predicate") {
  const auto vp = gen_vp(gen_st(six()));
  REQUIRE(vp.tables.size() == 3);
  CHECK(vp.tables[0].name == "p1");
  CHECK(vp.tables[1].name == "p2");
  CHECK(vp.tables[2].name == "p3");
  CHECK(vp.total_rows() == 6);
  CHECK(vp.tables[0].rows == std::vector<Row>{{"s1", "v"}, {"s2", "w"}, {"s3", "v"}});
  CHECK(vp.name_manifest[1] == std::pair<std::string, std::string>{"http://ex.org/p2", "p2"});

  // group-by oracle
  std::map<std::string, std::multiset<Row>> expect;
  for (const auto& r : gen_st(six()).rows) expect[*r[1]].insert(Row{r[0], r[2]});
  for (const auto& [iri, name] : vp.name_manifest) CHECK(as_multiset(vp.find(name)->rows) == expect[iri]);
}

TEST_CASE("single predicate VP equals ST without p") {
  std::vector<Triple> t{tr("a", "http://x/p", Term::iri("b")), tr("c", "http://x/p", Term::literal("d"))};
  const auto st = gen_st(t);
  const auto vp = gen_vp(st);
  REQUIRE(vp.tables.size() == 1);
  for (std::size_t i = 0; i < st.rows.size(); ++i) CHECK(vp.tables[0].rows[i] == Row{st.rows[i][0], st.rows[i][2]});
}

TEST_CASE("VP names collide on local name") {
  const auto vp = gen_vp(gen_st({tr("s", "http://x/a", Term::iri("o")), tr("s", "http://y/a", Term::iri("o"))}));
  REQUIRE(vp.tables.size() == 2);
  CHECK(vp.tables[0].name == "a");
  CHECK(vp.tables[1].name == "a_1");
  CHECK(vp.name_manifest == NameManifest{{"http://x/a", "a"}, {"http://y/a", "a_1"}});
}

TEST_CASE("gen_wpt padded unnest") {
  SUBCASE("single valued") {
    const auto w = gen_wpt(gen_st({tr("s", "http://x/p1", Term::literal("1")), tr("s", "http://x/p2", Term::literal("2"))}));
    REQUIRE(w.tables.size() == 1);
    CHECK(w.tables[0].columns == std::vector<std::string>{"s", "p1", "p2"});
    CHECK(w.tables[0].rows == std::vector<Row>{{"s", "1", "2"}});
  }
  SUBCASE("multi valued") {
    const auto w = gen_wpt(gen_st({tr("s", "http://x/p1", Term::literal("v1")),
                                   tr("s", "http://x/p2", Term::literal("w")),
                                   tr("s", "http://x/p1", Term::literal("v2"))}));
    CHECK(w.tables[0].rows == std::vector<Row>{{"s", "v1", "w"}, {"s", "v2", std::nullopt}});
  }
  SUBCASE("predicate named s does not clash with the subject column") {
    const auto w = gen_wpt(gen_st({tr("a", "http://x/s", Term::literal("1"))}));
    CHECK(w.tables[0].columns == std::vector<std::string>{"s", "s_1"});
  }
  SUBCASE("non-null cells equal triple count") {
    const auto triples = oracle::synthetic_triples(400, 30, 6, 11);
    const auto w = gen_wpt(gen_st(triples));
    std::size_t cells = 0;
    for (const auto& r : w.tables[0].rows)
      for (std::size_t c = 1; c < r.size(); ++c) cells += r[c].has_value();
    CHECK(cells == triples.size());
    w.tables[0].check_shape();
  }
}

TEST_CASE("gen_extvp semi-joins") {
  SUBCASE("one-row SS") {
    const auto vp = gen_vp(gen_st({tr("a", "http://x/p1", Term::iri("x")), tr("a", "http://x/p2", Term::iri("y"))}));
    ExtVpParams ss;
    ss.join_kinds = {JoinKind::kSS};
    const auto ext = gen_extvp(vp, ss);
    REQUIRE(ext.tables.size() == 2);
    CHECK(ext.tables[0].name == "p1__ss__p2");
    CHECK(ext.tables[0].rows == std::vector<Row>{{"a", "x"}});
    CHECK(ext.name_manifest[0].first == "http://x/p1|SS|http://x/p2");
  }
  SUBCASE("disjoint subjects produce nothing") {
    const auto vp = gen_vp(gen_st({tr("a", "http://x/p1", Term::iri("x")), tr("b", "http://x/p2", Term::iri("y"))}));
    ExtVpParams ss;
    ss.join_kinds = {JoinKind::kSS};
    CHECK(gen_extvp(vp, ss).tables.empty());
  }
  SUBCASE("OS and SO") {
    const auto vp = gen_vp(gen_st({tr("a", "http://x/knows", Term::iri("b")), tr("b", "http://x/name", Term::literal("B")),
                                   tr("c", "http://x/knows", Term::iri("z"))}));
    ExtVpParams os;
    os.join_kinds = {JoinKind::kOS, JoinKind::kSO};
    const auto ext = gen_extvp(vp, os);
    const auto* knows_os_name = ext.find("knows__os__name");
    REQUIRE(knows_os_name);
    CHECK(knows_os_name->rows == std::vector<Row>{{"a", "b"}});
    const auto* name_so_knows = ext.find("name__so__knows");
    REQUIRE(name_so_knows);
    CHECK(name_so_knows->rows == std::vector<Row>{{"b", "B"}});
  }
  SUBCASE("selectivity threshold drops weakly reducing tables") {
    const auto vp = gen_vp(gen_st({tr("a", "http://x/p1", Term::iri("1")), tr("b", "http://x/p1", Term::iri("2")),
                                   tr("a", "http://x/p2", Term::iri("3")), tr("b", "http://x/p2", Term::iri("4"))}));
    ExtVpParams p;
    p.join_kinds = {JoinKind::kSS};
    CHECK(gen_extvp(vp, p).tables.size() == 2);
    p.selectivity_threshold = 0.9;
    CHECK(gen_extvp(vp, p).tables.empty());
  }
  SUBCASE("containment on a random fixture") {
    const auto vp = gen_vp(gen_st(oracle::synthetic_triples(50, 8, 4, 3)));
    const auto ext = gen_extvp(vp, {});
    CHECK_FALSE(ext.tables.empty());
    for (std::size_t i = 0; i < ext.tables.size(); ++i) {
      const auto& key = ext.name_manifest[i].first;
      const auto source_iri = key.substr(0, key.find('|'));
      const RelTable* source = nullptr;
      for (const auto& [iri, name] : vp.name_manifest)
        if (iri == source_iri) source = vp.find(name);
      REQUIRE(source);
      const auto src = as_multiset(source->rows);
      for (const auto& r : ext.tables[i].rows) CHECK(src.count(r) > 0);
      CHECK(ext.tables[i].rows.size() <= source->rows.size());
    }
  }
}

TEST_CASE("build_schema") {
  const auto triples = six();
  CHECK(build_schema(SchemaKind::kST, triples, {}).tables.size() == 1);
  const auto ext = build_schema(SchemaKind::kExtVP, triples, {});
  CHECK(ext.kind == SchemaKind::kExtVP);
  CHECK(ext.find("p1") != nullptr);
  CHECK(ext.name_manifest.size() == ext.tables.size());
  CHECK(build_schema(SchemaKind::kVP, triples, {}) .tables == build_schema(SchemaKind::kVP, triples, {}).tables);
}

TEST_CASE("schema kinds") {
  CHECK(parse_schema_kind("ST") == SchemaKind::kST);
  CHECK(parse_schema_kind("extvp") == SchemaKind::kExtVP);
  CHECK(parse_schema_kind("wpt") == SchemaKind::kWPT);
  try {
    parse_schema_kind("pt");
    FAIL("pt accepted");
  } catch (const SchemaError& e) {
    CHECK(std::string(e.what()).find("PT generation unsupported") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_schema_kind("nope"), SchemaError);
  ExtVpParams none;
  none.join_kinds.clear();
  CHECK_THROWS_AS(none.validate(), SchemaError);
}

TEST_CASE("RelTable shape check") {
  RelTable t{"t", {"a", "b"}, {{"1"}}};
  CHECK_THROWS_AS(t.check_shape(), SchemaError);
}
