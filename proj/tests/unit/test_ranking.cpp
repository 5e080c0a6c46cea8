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
#include <cmath>

#include "ppa/criteria.hpp"
#include "ppa/error.hpp"
#include "ppa/ranking.hpp"

using namespace ppa;

namespace {

// 3x2x2 space, 2 queries, hand-picked runtimes
ResultMatrix fixture() {
  ConfigSpace space(std::vector<DimensionSpec>{{"schema", {"st", "vp", "wpt"}}, {"partition", {"hp", "sbp"}}, {"storage", {"csv", "orc"}}});
  const auto cs = enumerate(space);
  std::vector<double> data;
  for (std::size_t c = 0; c < cs.size(); ++c) {
    const auto& ch = cs[c].choices;
    const double base = 10.0 + 5.0 * static_cast<double>(ch[0]) + 2.0 * static_cast<double>(ch[1]) +
                        static_cast<double>(ch[2]);
    data.push_back(base);
    data.push_back(ch[0] == 2 ? 1.0 + static_cast<double>(c) : base * 2);
  }
  return ResultMatrix(space, cs, {"Q1", "Q2"}, data);
}

}  // namespace

TEST_CASE("rank scores reproduce the worked example") {
  const auto t = rank_scores("schema", {"extvp", "pt", "wpt", "st", "vp"},
                             {{6, 6, 8, 0, 0}, {6, 6, 5, 2, 1}, {7, 3, 0, 0, 10}, {1, 3, 4, 9, 3}, {0, 2, 3, 9, 6}}, 20);
  CHECK(t.scores[0] == doctest::Approx(0.725).epsilon(1e-12));
  CHECK(t.scores[1] == doctest::Approx(0.675).epsilon(1e-12));
  CHECK(t.scores[2] == doctest::Approx(0.4625).epsilon(1e-12));
  CHECK(t.scores[3] == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(t.scores[4] == doctest::Approx(0.2625).epsilon(1e-12));
  CHECK(t.score_of("pt") == doctest::Approx(0.675));
  CHECK_THROWS_AS(t.score_of("nope"), CriterionError);
}

TEST_CASE("rank score endpoints and errors") {
  const auto t = rank_scores("x", {"a", "b", "c"}, {{4, 0, 0}, {0, 4, 0}, {0, 0, 4}}, 4);
  CHECK(t.scores == std::vector<double>{1.0, 0.5, 0.0});
  CHECK_THROWS_AS(rank_scores("x", {"a"}, {{1}}, 1), CriterionError);
  CHECK_THROWS_AS(rank_scores("x", {"a", "b"}, {{1, 0}, {0, 1}}, 2), CriterionError);
  CHECK_THROWS_AS(rank_scores("x", {"a", "b"}, {{1, 0}}, 1), CriterionError);
  CHECK_THROWS_AS(rank_scores("x", {"a", "b"}, {{1, 0}, {0, 1}}, 0), CriterionError);
}

TEST_CASE("sd_scores from a matrix") {
  const auto m = fixture();
  const auto s = sd_scores(m, "schema");
  // st fastest on Q1, wpt fastest on Q2
  CHECK(s.occurrences[0] == std::vector<std::size_t>{1, 1, 0});
  CHECK(s.occurrences[2] == std::vector<std::size_t>{1, 0, 1});
  CHECK(s.scores[0] == doctest::Approx(0.75));
  CHECK(s.scores[1] == doctest::Approx(0.25));
  CHECK(s.scores[2] == doctest::Approx(0.5));
  const auto p = sd_scores(m, "partition");
  CHECK(p.scores == std::vector<double>{1.0, 0.0});
  CHECK(sd_scores(m, "partition", OptionAggregator::kMin).scores[0] == doctest::Approx(1.0));
  CHECK_THROWS_AS(sd_scores(m, "colour"), CriterionError);
}

TEST_CASE("sd ranking set ordering matches a sort oracle") {
  const auto m = fixture();
  const auto table = sd_scores(m, "schema");
  const auto set = sd_ranking_set(m, table);
  CHECK(set.criterion == "sd:schema");
  REQUIRE(set.size() == m.config_count());
  std::vector<std::size_t> idx(m.config_count());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) {
    const double sa = table.score_of(m.space().option_of(m.configs()[a], 0));
    const double sb = table.score_of(m.space().option_of(m.configs()[b], 0));
    if (sa != sb) return sa > sb;
    if (m.config_mean(a) != m.config_mean(b)) return m.config_mean(a) < m.config_mean(b);
    return m.labels()[a] < m.labels()[b];
  });
  for (std::size_t i = 0; i < idx.size(); ++i) CHECK(set.entries[i].label == m.labels()[idx[i]]);
  CHECK(set.entries[0].label.str() == "a.i.1");
}

TEST_CASE("pareto_q") {
  ConfigSpace space(std::vector<DimensionSpec>{{"x", {"a", "b", "c", "d", "e"}}});
  ResultMatrix m(space, enumerate(space), {"Q1", "Q2", "Q3"},
                 {1, 4, 4, 2, 3, 3.5, 3, 2, 3, 4, 1, 2, 5, 5, 5});
  const auto set = pareto_q(m);
  std::vector<std::string> order;
  for (const auto& e : set.entries) order.push_back(e.label.str());
  CHECK(order == std::vector<std::string>{"a", "d", "c", "b", "e"});
  CHECK(set.entries[0].score == 1.0);
  CHECK(set.entries[4].score == 0.5);

  ResultMatrix fastest(space, enumerate(space), {"Q1", "Q2"}, {5, 5, 4, 4, 1, 1, 3, 3, 2, 2});
  const auto f = pareto_q(fastest);
  CHECK(f.entries[0].label.str() == "c");
  CHECK(pareto_q_fronts(fastest).fronts[0] == std::vector<std::size_t>{2});
}

TEST_CASE("pareto_agg") {
  const auto m = fixture();
  const auto tables = all_sd_scores(m);
  CHECK(tables.size() == 3);
  const auto objectives = pareto_agg_objectives(m, tables);
  CHECK(objectives[0].size() == 3);
  const auto set = pareto_agg(m, tables);
  // a.i.* holds the top schema and partition scores
  CHECK(set.entries[0].score == 1.0);
  CHECK(set.entries[0].label.str().rfind("a.i.", 0) == 0);

  // two dimensions -> two objectives
  ConfigSpace two(std::vector<DimensionSpec>{{"schema", {"st", "vp"}}, {"storage", {"csv", "orc"}}});
  ResultMatrix m2(two, enumerate(two), {"Q"}, {1, 2, 3, 4});
  CHECK(pareto_agg_objectives(m2, all_sd_scores(m2))[0].size() == 2);
  CHECK(pareto_agg(m2, all_sd_scores(m2)).entries[0].label.str() == "a.i");
}

TEST_CASE("triangle area") {
  const auto sample = rta(0.73, 0.771, 0.75);
  CHECK(std::abs(sample.area - 0.7308) <= 0.001);
  const auto full = rta(1, 1, 1);
  CHECK(full.area == doctest::Approx(1.29904).epsilon(1e-5));
  CHECK(full.normalized == doctest::Approx(1.0));
  CHECK(rta(0, 0, 0).area == 0.0);
  CHECK_THROWS_AS(rta(1.2, 0, 0), CriterionError);

  const auto m = fixture();
  const auto set = rta_ranking_set(m, all_sd_scores(m));
  CHECK(set.entries[0].label.str().rfind("a.i.", 0) == 0);
  for (std::size_t i = 1; i < set.size(); ++i) CHECK(set.entries[i - 1].score >= set.entries[i].score);

  ConfigSpace two(std::vector<DimensionSpec>{{"schema", {"st", "vp"}}, {"storage", {"csv", "orc"}}});
  ResultMatrix m2(two, enumerate(two), {"Q"}, {1, 2, 3, 4});
  CHECK_THROWS_AS(rta_ranking_set(m2, all_sd_scores(m2)), CriterionError);
}

TEST_CASE("top_k") {
  RankingSet set{"x", {{Label("d.ii.3"), 1}, {Label("b.ii.2"), 0.9}, {Label("e.ii.4"), 0.8}, {Label("a.i.1"), 0.1}}};
  CHECK(top_k(set, 3).labels() == std::vector<Label>{Label("d.ii.3"), Label("b.ii.2"), Label("e.ii.4")});
  CHECK(top_k(set, 4).entries == set.entries);
  CHECK_THROWS_AS(top_k(set, 0), CriterionError);
  CHECK_THROWS_AS(top_k(set, 5), CriterionError);
  CHECK(set.position_of(Label("e.ii.4")) == 2u);
  CHECK(encode_ranking_csv(top_k(set, 2)) == "rank,config,score\n1,d.ii.3,1\n2,b.ii.2,0.9\n");
}

TEST_CASE("criterion registry") {
  const auto reg = CriterionRegistry::with_builtins();
  CHECK(reg.keys() == std::vector<std::string>{"pareto_agg", "pareto_q", "rta", "sd"});
  const auto m = fixture();
  CHECK(reg.create("sd:partition")->produce(m).criterion == "sd:partition");
  CHECK(reg.create("rta")->produce(m).size() == m.config_count());
  CHECK_THROWS_AS(reg.create("sd"), CriterionError);
  CHECK_THROWS_AS(reg.create("pareto_q:x"), CriterionError);
  CHECK_THROWS_AS(reg.create("borda"), CriterionError);
  CHECK(file_stem("sd:schema") == "sd_schema");

  CriterionRegistry custom = reg;
  struct Fixed : Criterion {
    std::string name() const override { return "fixed"; }
    RankingSet produce(const ResultMatrix& mm) const override {
      RankingSet s{"fixed", {}};
      for (const auto& l : mm.labels()) s.entries.push_back({l, 0.0});
      return s;
    }
  };
  custom.add("fixed", [](std::string_view, const CriterionOptions&) { return std::make_unique<Fixed>(); });
  CHECK(custom.create("fixed")->produce(m).size() == m.config_count());
}

TEST_CASE("deterministic criteria") {
  const auto m = fixture();
  const auto reg = CriterionRegistry::with_builtins();
  for (const char* name : {"sd:schema", "sd:storage", "pareto_q", "pareto_agg", "rta"}) {
    CHECK(encode_ranking_csv(reg.create(name)->produce(m)) == encode_ranking_csv(reg.create(name)->produce(m)));
  }
}
