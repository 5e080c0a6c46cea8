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

#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "ppa/error.hpp"
#include "ppa/pipeline.hpp"

using namespace ppa;
namespace fs = std::filesystem;

namespace {

const char* kConfig = R"(
dataset: fixture
runs: 2
partitions: 2
dimensions:
  schema: [st, vp, wpt]
  partition: [hp, sbp]
  storage: [csv, parquet]
)";

const char* kWorkload = R"(
queries:
  q1:
    st: "SELECT s FROM st WHERE p = 'http://ex.org/name'"
    vp: "SELECT s FROM name"
    wpt: "SELECT s FROM wpt WHERE name != ''"
  q2:
    st: "SELECT t.s FROM st t JOIN st u ON t.o = u.s"
    vp: "SELECT k.s FROM knows k JOIN name n ON k.o = n.s"
    wpt: "SELECT t.s FROM wpt t JOIN wpt u ON t.knows = u.s"
  q3:
    st: "SELECT * FROM st"
    vp: "SELECT * FROM knows"
    wpt: "SELECT * FROM wpt"
)";

fs::path fixture() { return fs::path(PPA_TEST_DATA) / "fixture10.nt"; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

// hand-built matrix, no I/O
ResultMatrix small_matrix(unsigned seed = 5) {
  const auto cfg = parse_experiment_config(kConfig);
  const auto cs = enumerate(cfg.space);
  std::vector<LogRecord> logs;
  unsigned x = seed;
  for (const auto& c : cs) {
    for (const char* q : {"q1", "q2", "q3", "q4"}) {
      x = x * 1103515245u + 12345u;
      logs.push_back({"fixture", encode_label(cfg.space, c), q, 1, 1.0 + (x >> 16) % 100});
    }
  }
  return aggregate(logs, cfg.space);
}

}  // namespace

TEST_CASE("prepare writes one directory per configuration") {
  oracle::TempDir dir("prep");
  auto cfg = parse_experiment_config(R"(
dataset: fixture
dimensions:
  schema: [st, vp]
  partition: [hp]
  storage: [csv]
)");
  const auto summary = prepare_data(cfg, fixture(), dir.path());
  CHECK(summary.failures.empty());
  REQUIRE(summary.prepared.size() == 2);
  CHECK(summary.stats.triples_parsed == 7);
  for (const auto& c : enumerate(cfg.space)) {
    const auto d = config_data_dir(cfg, dir.path(), c);
    CHECK(fs::exists(d / "manifest.csv"));
    CHECK_FALSE(read_manifest(d).entries.empty());
  }
  CHECK_THROWS_AS(prepare_data(cfg, dir.path() / "missing.nt", dir.path()), Error);
}

TEST_CASE("empty input and unsupported schema") {
  oracle::TempDir dir("prep-edge");
  spit(dir.path() / "empty.nt", "");
  auto cfg = parse_experiment_config(R"(
dataset: e
dimensions:
  schema: [st, pt]
  storage: [csv]
)");
  const auto summary = prepare_data(cfg, dir.path() / "empty.nt", dir.path() / "out");
  CHECK_FALSE(summary.warnings.empty());
  REQUIRE(summary.prepared.size() == 1);
  const auto st = read_manifest(config_data_dir(cfg, dir.path() / "out", enumerate(cfg.space)[0]));
  REQUIRE(st.entries.size() == 1);
  CHECK(st.entries[0].total_rows() == 0);
  REQUIRE(summary.failures.size() == 1);
  CHECK(summary.failures[0].config.str() == "b.i");
  CHECK(summary.failures[0].message.find("PT generation unsupported") != std::string::npos);
}

TEST_CASE("dimension without a preparation role is rejected") {
  oracle::TempDir dir("prep-role");
  auto cfg = parse_experiment_config(R"(
dataset: e
dimensions:
  schema: [st]
  engine: [spark, hive]
)");
  CHECK_THROWS_AS(prepare_data(cfg, fixture(), dir.path()), ConfigFileError);
}

TEST_CASE("full pipeline is deterministic for a fixed log") {
  oracle::TempDir dir("e2e");
  const auto cfg = parse_experiment_config(kConfig);
  const auto w = Workload::parse(kWorkload);
  const auto prep = prepare_data(cfg, fixture(), dir.path() / "data");
  CHECK(prep.failures.empty());
  CHECK(prep.prepared.size() == 12);

  // preparation itself is byte-stable
  const auto first_dir = config_data_dir(cfg, dir.path() / "data", enumerate(cfg.space)[3]);
  std::map<std::string, std::string> snapshot;
  for (const auto& e : fs::directory_iterator(first_dir)) snapshot[e.path().filename().string()] = slurp(e.path());
  prepare_data(cfg, fixture(), dir.path() / "data");
  for (const auto& [name, bytes] : snapshot) CHECK(slurp(first_dir / name) == bytes);

  const auto run = run_experiment(cfg, w, dir.path() / "data", dir.path() / "log.csv");
  CHECK(run.failures.empty());
  CHECK(run.records.size() == 12 * 3 * 2);
  const auto m = load_matrix(cfg, dir.path() / "log.csv");
  CHECK(m.config_count() == 12);
  CHECK(m.query_count() == 3);

  RankRequest req{default_criteria(m), 3, {}, false};
  CHECK(req.criteria ==
        std::vector<std::string>{"sd:schema", "sd:partition", "sd:storage", "pareto_q", "pareto_agg", "rta"});
  const auto a = rank_matrix(m, req, dir.path() / "r1");
  const auto b = rank_matrix(load_matrix(cfg, dir.path() / "log.csv"), req, dir.path() / "r2");
  REQUIRE(a.files.size() == b.files.size());
  for (std::size_t i = 0; i < a.files.size(); ++i) {
    CHECK(a.files[i].filename() == b.files[i].filename());
    CHECK(slurp(a.files[i]) == slurp(b.files[i]));
  }

  // composition: files equal direct criterion output
  const auto reg = CriterionRegistry::with_builtins();
  for (const auto& name : req.criteria) {
    CHECK(slurp(dir.path() / "r1" / (file_stem(name) + ".csv")) == encode_ranking_csv(reg.create(name)->produce(m)));
  }
}

TEST_CASE("rank outputs and errors") {
  oracle::TempDir dir("rank");
  const auto m = small_matrix();
  const auto out = rank_matrix(m, {{"sd:schema"}, 3, {}, true}, dir.path());
  std::size_t csv = 0, svg = 0;
  for (const auto& f : out.files) {
    CHECK(fs::exists(f));
    csv += f.extension() == ".csv";
    svg += f.extension() == ".svg";
  }
  CHECK(csv == 1);
  CHECK(svg == 1);
  CHECK(slurp(dir.path() / "sd_schema_top3.md").find("| Rank | Config | Score | Options |") != std::string::npos);

  CHECK_THROWS_AS(rank_matrix(m, {{"sd:schema"}, 13, {}, false}, dir.path()), Error);
  CHECK_THROWS_AS(rank_matrix(m, {{"sd:schema"}, 0, {}, false}, dir.path()), Error);
  CHECK_THROWS_AS(rank_matrix(m, {{"nope"}, 3, {}, false}, dir.path()), Error);

  const auto pa = rank_matrix(m, {{"pareto_agg"}, 3, {}, false}, dir.path() / "pa");
  CHECK(pa.sets[0].size() == 12);
}

TEST_CASE("pareto_agg uses only the varying dimensions") {
  const auto cfg = parse_experiment_config(R"(
dataset: d
dimensions:
  schema: [st, vp]
  partition: [hp]
  storage: [csv, parquet]
)");
  std::vector<LogRecord> logs;
  double t = 1;
  for (const auto& c : enumerate(cfg.space)) logs.push_back({"d", encode_label(cfg.space, c), "q1", 1, t++});
  const auto m = aggregate(logs, cfg.space);
  CHECK(pareto_agg_objectives(m, all_sd_scores(m))[0].size() == 2);
  CHECK(default_criteria(m) == std::vector<std::string>{"sd:schema", "sd:storage", "pareto_q", "pareto_agg"});
}

TEST_CASE("evaluate") {
  const auto m = small_matrix();
  EvaluateRequest req{{"sd:schema", "pareto_q"}, 3, 3, CoherenceMode::kPairwise, 0, {}};
  const auto same = evaluate_matrices({"x", "x#2"}, {m, m}, req);
  std::size_t coherence_rows = 0;
  for (const auto& r : same) {
    if (r.metric == "coherence") {
      ++coherence_rows;
      CHECK(r.value == 0.0);
    } else {
      CHECK(r.value >= 0.0);
      CHECK(r.value <= 1.0);
    }
  }
  CHECK(coherence_rows == 2);
  const auto csv = encode_metrics_csv(same, req);
  CHECK(csv.rfind("criterion,metric,datasets,k,h,coherence_mode,value\n", 0) == 0);
  CHECK(encode_metrics_markdown(same, req).find("K(x/x#2)") != std::string::npos);

  const auto other = small_matrix(99);
  const auto diff = evaluate_matrices({"x", "y"}, {m, other}, req);
  bool some_positive = false;
  for (const auto& r : diff) some_positive |= r.metric == "coherence" && r.value > 0.0;
  CHECK(some_positive);
}

TEST_CASE("report") {
  oracle::TempDir dir("report");
  const auto m = small_matrix();
  const auto files = write_report(m, std::string("schema"), {{"csv", "storage=csv"}, {"nohp", "partition!=hp"}},
                                  dir.path());
  CHECK(fs::exists(dir.path() / "matrix.csv"));
  CHECK(fs::exists(dir.path() / "per_query_rankings.csv"));
  CHECK(fs::exists(dir.path() / "impact_schema_by_storage.csv"));
  CHECK(fs::exists(dir.path() / "impact_storage_by_schema.svg"));
  const auto table = slurp(dir.path() / "global_ranking_schema.csv");
  CHECK(table.rfind("schema,all,csv,nohp\n", 0) == 0);
  CHECK(slurp(dir.path() / "per_query_rankings.csv").rfind("query,rank,config,runtime_ms\n", 0) == 0);
  for (const auto& f : files) CHECK(fs::exists(f));

  write_run_manifest(dir.path(), "report", "cfg.yaml", "fixture", files);
  const auto manifest = slurp(dir.path() / "run_manifest.json");
  CHECK(manifest.find("\"tool_version\"") != std::string::npos);
  CHECK(manifest.find("matrix.csv") != std::string::npos);
}
