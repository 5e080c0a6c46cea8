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
#include <numeric>

#include "ppa/error.hpp"
#include "ppa/results.hpp"

using namespace ppa;

namespace {

ConfigSpace space_2x2() { return ConfigSpace(std::vector<DimensionSpec>{{"x", {"p", "q"}}, {"y", {"u", "v"}}}); }

LogRecord rec(const std::string& label, const std::string& q, std::size_t run, double ms) {
  return {"d", Label(label), q, run, ms};
}

ConfigSpace full_space() {
  return ConfigSpace(std::vector<DimensionSpec>{{"schema", {"st", "vp", "pt", "extvp", "wpt"}},
                      {"partition", {"hp", "sbp", "pbp"}},
                      {"storage", {"csv", "avro", "orc", "parquet"}}});
}

}  // namespace

TEST_CASE("aggregate takes the mean over runs") {
  const auto space = space_2x2();
  const auto m = aggregate({rec("a.i", "Q1", 1, 10), rec("a.i", "Q1", 2, 20), rec("a.i", "Q1", 3, 30)}, space);
  CHECK(m.config_count() == 1);
  CHECK(m.at(0, 0) == doctest::Approx(20.0));
  CHECK(aggregate({rec("b.ii", "Q", 1, 7.5)}, space).at(0, 0) == 7.5);
}

TEST_CASE("2x2x3-run fixture against hand-computed means") {
  std::vector<LogRecord> logs;
  // (config, query) -> runs
  const std::vector<std::tuple<std::string, std::string, std::vector<double>>> cells{
      {"b.i", "Q2", {3, 4, 5}}, {"a.i", "Q1", {1, 2, 3}}, {"a.i", "Q2", {10, 10, 40}}, {"b.i", "Q1", {6, 6, 9}}};
  for (const auto& [cfg, q, runs] : cells)
    for (std::size_t r = 0; r < runs.size(); ++r) logs.push_back(rec(cfg, q, r + 1, runs[r]));
  const auto m = aggregate(logs, space_2x2());
  REQUIRE(m.config_count() == 2);
  CHECK(m.labels()[0].str() == "a.i");
  CHECK(m.queries() == std::vector<std::string>{"Q2", "Q1"});
  CHECK(m.at(0, 0) == doctest::Approx(20.0));
  CHECK(m.at(0, 1) == doctest::Approx(2.0));
  CHECK(m.at(1, 0) == doctest::Approx(4.0));
  CHECK(m.at(1, 1) == doctest::Approx(7.0));
  CHECK(m.config_mean(0) == doctest::Approx(11.0));

  const auto warm = aggregate(logs, space_2x2(), {true});
  CHECK(warm.at(0, 0) == doctest::Approx(25.0));
  CHECK(warm.at(1, 1) == doctest::Approx(7.5));
}

TEST_CASE("aggregate errors") {
  const auto space = space_2x2();
  CHECK_THROWS_AS(aggregate({}, space), MatrixError);
  try {
    aggregate({rec("a.i", "Q1", 1, 1), rec("b.i", "Q2", 1, 1)}, space);
    FAIL("accepted gaps");
  } catch (const MatrixError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("(a.i, Q2)") != std::string::npos);
    CHECK(msg.find("(b.i, Q1)") != std::string::npos);
  }
  std::vector<LogRecord> mixed{rec("a.i", "Q", 1, 1), rec("b.i", "Q", 1, 1)};
  mixed[1].dataset = "other";
  CHECK_THROWS_AS(aggregate(mixed, space), MatrixError);
  CHECK_THROWS_AS(ResultMatrix(space, {{{0, 0}}}, {"Q"}, {0.0}), MatrixError);
  CHECK_THROWS_AS(ResultMatrix(space, {{{0, 0}}, {{0, 0}}}, {"Q"}, {1.0, 2.0}), MatrixError);
}

TEST_CASE("matrix is kept in enumeration order and can be restricted") {
  const auto space = space_2x2();
  ResultMatrix m(space, {{{1, 1}}, {{0, 1}}, {{1, 0}}, {{0, 0}}}, {"Q"}, {4, 2, 3, 1});
  CHECK(m.labels() == std::vector<Label>{Label("a.i"), Label("a.ii"), Label("b.i"), Label("b.ii")});
  CHECK(m.at(3, 0) == 4);
  CHECK(m.index_of(Label("b.i")) == 2u);
  CHECK_FALSE(m.index_of(Label("c.i")).has_value());
  SpaceFilter f;
  f.include["y"] = {"v"};
  const auto r = m.restrict_to(filter_space(space, f));
  CHECK(r.config_count() == 2);
  CHECK(r.labels() == std::vector<Label>{Label("a.i"), Label("b.i")});
  CHECK(r.at(1, 0) == 4);
}

TEST_CASE("per-query rankings") {
  const auto space = full_space();
  const auto configs = enumerate(space);
  std::vector<double> data;
  for (std::size_t c = 0; c < configs.size(); ++c) data.push_back(1.0 + static_cast<double>((c * 37) % 60));
  // e.ii.4 is the slowest on Q1
  const auto slow = *std::find(configs.begin(), configs.end(), decode_label(space, "e.ii.4"));
  std::vector<Configuration> cs(configs.begin(), configs.end());
  ResultMatrix m(space, cs, {"Q1"}, [&] {
    std::vector<double> d = data;
    for (std::size_t c = 0; c < cs.size(); ++c)
      if (cs[c] == slow) d[c] = 1000.0;
    return d;
  }());
  const auto r = per_query_rankings(m);
  CHECK(r.rank[0][*m.index_of(Label("e.ii.4"))] == 60);
  std::vector<std::size_t> ranks = r.rank[0];
  std::sort(ranks.begin(), ranks.end());
  std::vector<std::size_t> expect(60);
  std::iota(expect.begin(), expect.end(), 1);
  CHECK(ranks == expect);

  ResultMatrix one(ConfigSpace(std::vector<DimensionSpec>{{"x", {"p"}}}), {{{0}}}, {"A", "B"}, {3, 4});
  const auto r1 = per_query_rankings(one);
  CHECK(r1.rank[0][0] == 1);
  CHECK(r1.rank[1][0] == 1);

  ResultMatrix ties(space_2x2(), {{{1, 0}}, {{0, 1}}}, {"Q"}, {5, 5});
  const auto rt = per_query_rankings(ties);
  CHECK(ties.labels()[rt.order[0][0]].str() == "a.ii");
}

TEST_CASE("scaling one query keeps its ranking") {
  const auto space = space_2x2();
  const auto cs = enumerate(space);
  ResultMatrix a(space, cs, {"Q1", "Q2"}, {5, 1, 3, 3, 2, 8, 4, 4});
  ResultMatrix b(space, cs, {"Q1", "Q2"}, {5 * 7.0, 1, 3 * 7.0, 3, 2 * 7.0, 8, 4 * 7.0, 4});
  CHECK(per_query_rankings(a).order == per_query_rankings(b).order);
}

TEST_CASE("bottom_h") {
  const auto space = space_2x2();
  ResultMatrix m(space, enumerate(space), {"Q"}, {4, 1, 3, 2});
  const auto r = per_query_rankings(m);
  CHECK(bottom_h(m, r, 0, 2) == std::vector<Label>{Label("a.i"), Label("b.i")});
  CHECK(bottom_h(m, r, 0, 4).size() == 4);
  CHECK_THROWS_AS(bottom_h(m, r, 0, 0), MatrixError);
  CHECK_THROWS_AS(bottom_h(m, r, 0, 5), MatrixError);
  CHECK_THROWS_AS(bottom_h(m, r, 1, 1), MatrixError);
}

TEST_CASE("matrix CSV") {
  const auto space = space_2x2();
  ResultMatrix m(space, {{{0, 0}}, {{1, 1}}}, {"Q1", "Q2"}, {1.5, 2, 3, 4.25});
  CHECK(encode_matrix_csv(m) == "config,Q1,Q2\na.i,1.5,2\nb.ii,3,4.25\n");
}
