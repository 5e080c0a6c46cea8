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

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ppa/error.hpp"
#include "ppa/pipeline.hpp"
#include "ppa/storage.hpp"

namespace fs = std::filesystem;

namespace {

struct Globals {
  std::string config;
  std::string out = "ppa_out";
  std::uint64_t seed = 0;
  bool discard_first = false;
};

std::vector<std::string> split_list(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    std::size_t start = 0;
    while (start <= item.size()) {
      auto comma = item.find(',', start);
      if (comma == std::string::npos) comma = item.size();
      if (comma > start) out.push_back(item.substr(start, comma - start));
      start = comma + 1;
    }
  }
  return out;
}

void progress(const std::string& msg) { std::cerr << msg << '\n'; }

std::vector<std::string> dataset_names(const std::vector<std::vector<ppa::LogRecord>>& logs) {
  std::vector<std::string> names;
  std::map<std::string, int> seen;
  for (std::size_t i = 0; i < logs.size(); ++i) {
    std::string name = logs[i].empty() ? "log" + std::to_string(i + 1) : logs[i].front().dataset;
    if (seen[name]++) name += "#" + std::to_string(i + 1);
    names.push_back(name);
  }
  return names;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prescriptive performance analysis for RDF relational storage experiments"};
  app.set_version_flag("--version", std::string(ppa::kToolVersion));
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--config", g.config, "Experiment configuration (YAML)")->required()->check(CLI::ExistingFile);
  app.add_option("--out", g.out, "Output directory")->capture_default_str();
  app.add_option("--seed", g.seed, "Reserved for stochastic criteria; currently unused");
  app.add_flag("--discard-first", g.discard_first, "Drop run 1 of every (config, query) cell when aggregating");

  // prepare
  auto* prepare = app.add_subcommand("prepare", "Generate, partition and store tables for every configuration");
  std::string input;
  bool strict = false;
  prepare->add_option("--input", input, "N-Triples file (.nt or .nt.gz)")->required()->check(CLI::ExistingFile);
  prepare->add_flag("--strict", strict, "Fail on the first malformed line");

  // run
  auto* run = app.add_subcommand("run", "Execute the workload over prepared data and write a runtime log");
  std::string workload_path, data_dir, run_log;
  run->add_option("--workload", workload_path, "Workload file (YAML)")->required()->check(CLI::ExistingFile);
  run->add_option("--data", data_dir, "Prepared data directory (defaults to --out)");
  run->add_option("--log", run_log, "Log CSV to write (defaults to <out>/log.csv)");

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Validate runtime logs and aggregate them into a result matrix");
  std::vector<std::string> ingest_logs;
  ingest->add_option("--log", ingest_logs, "Log CSV (repeatable; records are concatenated)")
      ->required()
      ->check(CLI::ExistingFile);

  // rank
  auto* rank = app.add_subcommand("rank", "Rank configurations under one or more criteria");
  std::string rank_log;
  std::vector<std::string> rank_criteria;
  std::size_t rank_k = 3;
  std::string rank_agg = "mean";
  bool no_plots = false;
  rank->add_option("--log", rank_log, "Log CSV")->required()->check(CLI::ExistingFile);
  rank->add_option("--criteria", rank_criteria, "Criteria, e.g. sd:schema,pareto_q (default: all applicable)");
  rank->add_option("-k", rank_k, "Top-k size for the markdown tables")->capture_default_str();
  rank->add_option("--aggregator", rank_agg, "Per-query option aggregator: mean, min, median")->capture_default_str();
  rank->add_flag("--no-plots", no_plots, "Skip SVG and point-data output");

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "Conformance and coherence of ranking criteria");
  std::vector<std::string> eval_logs, eval_criteria;
  std::size_t eval_k = 3, eval_h = 0, eval_top = 0;
  std::string eval_mode = "pairwise", eval_agg = "mean";
  evaluate->add_option("--log", eval_logs, "Log CSV per dataset (repeatable)")->required()->check(CLI::ExistingFile);
  evaluate->add_option("--criteria", eval_criteria, "Criteria (default: all applicable)");
  evaluate->add_option("-k", eval_k, "Top-k size")->capture_default_str();
  evaluate->add_option("-H,--bottom-h", eval_h, "Bottom-h size per query")->required();
  evaluate->add_option("--coherence-mode", eval_mode, "pairwise or positional")->capture_default_str();
  evaluate->add_option("--coherence-top", eval_top, "Compare only the first N ranked configurations (0 = all)");
  evaluate->add_option("--aggregator", eval_agg, "Per-query option aggregator")->capture_default_str();

  // replicability
  auto* repl = app.add_subcommand("replicability", "How often option A strictly beats option B");
  std::string repl_log, repl_dim, repl_a, repl_b, repl_group;
  repl->add_option("--log", repl_log, "Log CSV")->required()->check(CLI::ExistingFile);
  repl->add_option("--dimension", repl_dim, "Dimension holding A and B")->required();
  repl->add_option("-a", repl_a, "Optimized option")->required();
  repl->add_option("-b", repl_b, "Baseline option")->required();
  repl->add_option("--group-by", repl_group, "Dimension to group cells by")->required();

  // report
  auto* report = app.add_subcommand("report", "Matrix, per-query rankings, dimension impact and global ranking");
  std::string report_log, report_dim, report_agg = "mean";
  std::vector<std::string> report_slices;
  report->add_option("--log", report_log, "Log CSV")->required()->check(CLI::ExistingFile);
  report->add_option("--dimension", report_dim, "Dimension for the global ranking table");
  report->add_option("--slice", report_slices, "NAME=EXPR, e.g. small=partition=hp|sbp;storage!=cols-bin");
  report->add_option("--aggregator", report_agg, "Per-query option aggregator")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    const auto config = ppa::load_experiment_config(g.config);
    const fs::path out = g.out;
    ppa::AggregateOptions agg_opts{g.discard_first};

    if (*prepare) {
      const auto summary = ppa::prepare_data(config, input, out,
                                             strict ? ppa::ParseMode::kStrict : ppa::ParseMode::kLenient, progress);
      for (const auto& w : summary.warnings) std::cerr << "warning: " << w << '\n';
      std::vector<fs::path> outputs;
      for (const auto& c : ppa::enumerate(config.space)) {
        const auto dir = ppa::config_data_dir(config, out, c);
        if (fs::exists(dir / "manifest.csv")) outputs.push_back(dir);
      }
      ppa::write_run_manifest(out, "prepare", g.config, config.dataset, outputs);
      std::cout << "prepared " << summary.prepared.size() << " of " << config.space.size() << " configurations ("
                << summary.stats.triples_parsed << " triples, " << summary.stats.lines_skipped
                << " lines skipped)\n";
      for (const auto& f : summary.failures) std::cerr << "error: " << f.config.str() << ": " << f.message << '\n';
      return summary.failures.empty() ? 0 : 1;
    }

    if (*run) {
      const auto workload = ppa::Workload::load(workload_path);
      const fs::path data = data_dir.empty() ? out : fs::path(data_dir);
      const fs::path log = run_log.empty() ? out / "log.csv" : fs::path(run_log);
      const auto result = ppa::run_experiment(config, workload, data, log, progress);
      for (const auto& f : result.failures) std::cerr << "error: " << f.config.str() << ": " << f.message << '\n';
      ppa::write_run_manifest(out, "run", g.config, config.dataset, {log});
      std::cout << "wrote " << result.records.size() << " records to " << log.string() << '\n';
      const bool all_failed = !result.failures.empty() && result.failures.size() >= config.space.size();
      return all_failed ? 1 : 0;
    }

    if (*ingest) {
      std::vector<ppa::LogRecord> records;
      for (const auto& path : ingest_logs) {
        auto part = ppa::ingest_log_file(path, config.space);
        records.insert(records.end(), part.begin(), part.end());
      }
      const auto matrix = ppa::aggregate(records, config.space, agg_opts);
      ppa::write_log_file(out / "log.csv", records);
      ppa::write_file(out / "matrix.csv", ppa::encode_matrix_csv(matrix));
      ppa::write_run_manifest(out, "ingest", g.config, config.dataset, {out / "log.csv", out / "matrix.csv"});
      std::cout << "ingested " << records.size() << " records: " << matrix.config_count() << " configurations x "
                << matrix.query_count() << " queries\n";
      return 0;
    }

    if (*rank) {
      const auto matrix = ppa::load_matrix(config, rank_log, agg_opts);
      ppa::RankRequest req;
      req.criteria = split_list(rank_criteria);
      req.k = rank_k;
      req.options.aggregator = ppa::parse_option_aggregator(rank_agg);
      req.plots = !no_plots;
      const auto result = ppa::rank_matrix(matrix, req, out);
      ppa::write_run_manifest(out, "rank", g.config, config.dataset, result.files);
      for (const auto& set : result.sets) {
        std::cout << set.criterion << ":";
        const auto top = ppa::top_k(set, rank_k);
        for (const auto& e : top.entries) std::cout << ' ' << e.label.str();
        std::cout << '\n';
      }
      return 0;
    }

    if (*evaluate) {
      std::vector<std::vector<ppa::LogRecord>> logs;
      std::vector<ppa::ResultMatrix> matrices;
      for (const auto& path : eval_logs) {
        logs.push_back(ppa::ingest_log_file(path, config.space));
        matrices.push_back(ppa::aggregate(logs.back(), config.space, agg_opts));
      }
      ppa::EvaluateRequest req;
      req.criteria = split_list(eval_criteria);
      req.k = eval_k;
      req.h = eval_h;
      req.mode = ppa::parse_coherence_mode(eval_mode);
      req.coherence_top = eval_top;
      req.options.aggregator = ppa::parse_option_aggregator(eval_agg);
      const auto rows = ppa::evaluate_matrices(dataset_names(logs), matrices, req);
      ppa::write_file(out / "evaluation.csv", ppa::encode_metrics_csv(rows, req));
      ppa::write_file(out / "evaluation.md", ppa::encode_metrics_markdown(rows, req));
      ppa::write_run_manifest(out, "evaluate", g.config, config.dataset,
                              {out / "evaluation.csv", out / "evaluation.md"});
      std::cout << ppa::encode_metrics_markdown(rows, req);
      return 0;
    }

    if (*repl) {
      const auto matrix = ppa::load_matrix(config, repl_log, agg_opts);
      const auto report_data = ppa::replicability_pair(matrix, repl_a, repl_b, repl_dim, repl_group);
      const std::string stem = "replicability_" + repl_dim + "_" + repl_a + "_vs_" + repl_b;
      ppa::write_file(out / (stem + ".csv"), ppa::encode_replicability_csv(report_data));
      ppa::write_file(out / (stem + ".md"), ppa::encode_replicability_markdown(report_data));
      ppa::write_run_manifest(out, "replicability", g.config, config.dataset,
                              {out / (stem + ".csv"), out / (stem + ".md")});
      std::cout << ppa::encode_replicability_markdown(report_data);
      return 0;
    }

    if (*report) {
      const auto matrix = ppa::load_matrix(config, report_log, agg_opts);
      std::vector<ppa::Slice> slices;
      for (const auto& s : report_slices) {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0) throw ppa::EvaluationError("--slice expects NAME=EXPR, got '" + s + "'");
        slices.push_back({s.substr(0, eq), s.substr(eq + 1)});
      }
      std::optional<std::string> dim;
      if (!report_dim.empty()) dim = report_dim;
      const auto files = ppa::write_report(matrix, dim, slices, out, ppa::parse_option_aggregator(report_agg));
      ppa::write_run_manifest(out, "report", g.config, config.dataset, files);
      std::cout << "wrote " << files.size() << " report files to " << out.string() << '\n';
      return 0;
    }
  } catch (const ppa::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
