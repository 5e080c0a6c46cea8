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

#include "ppa/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "ppa/csv.hpp"
#include "ppa/error.hpp"
#include "ppa/partition.hpp"
#include "ppa/schema.hpp"
#include "ppa/storage.hpp"
#include "ppa/svg.hpp"

namespace fs = std::filesystem;

namespace ppa {

namespace {

void note(const ProgressFn& progress, const std::string& msg) {
  if (progress) progress(msg);
}

std::string schema_option(const ExperimentConfig& cfg, const Configuration& c) {
  return cfg.roles.schema ? cfg.space.option_of(c, *cfg.roles.schema) : std::string("st");
}

std::optional<std::string> partition_option(const ExperimentConfig& cfg, const Configuration& c) {
  if (!cfg.roles.partition) return std::nullopt;
  return cfg.space.option_of(c, *cfg.roles.partition);
}

StorageFormat storage_of(const ExperimentConfig& cfg, const Configuration& c) {
  return cfg.roles.storage ? cfg.format_for(cfg.space.option_of(c, *cfg.roles.storage)) : StorageFormat::kRowsCsv;
}

void check_roles(const ExperimentConfig& cfg) {
  for (std::size_t d = 0; d < cfg.space.dimension_count(); ++d) {
    if (cfg.roles.schema == d || cfg.roles.partition == d || cfg.roles.storage == d) continue;
    throw ConfigFileError("dimension '" + cfg.space.dimension(d).name + "' has no data-preparation role");
  }
}

// Table name -> predicate the table was derived from.
std::map<std::string, std::string> source_predicates(const SchemaSet& set) {
  std::map<std::string, std::string> out;
  if (set.kind != SchemaKind::kVP && set.kind != SchemaKind::kExtVP) return out;
  for (const auto& [key, name] : set.name_manifest) {
    const auto bar = key.find('|');
    out[name] = bar == std::string::npos ? key : key.substr(0, bar);
  }
  return out;
}

PartitionPlan plan_for(const SchemaSet& set, const RelTable& table, const std::optional<std::string>& option,
                       std::size_t n, const std::map<std::string, std::string>& predicates) {
  PartitionPlan plan;
  if (!option) return plan;
  plan.technique = parse_partition_technique(*option);
  plan.n = n;
  switch (plan.technique) {
    case PartitionTechnique::kHorizontal:
      break;
    case PartitionTechnique::kSubject:
      plan.key_column = "s";
      break;
    case PartitionTechnique::kPredicate:
      if (set.kind == SchemaKind::kST) {
        plan.key_column = "p";
      } else if (auto it = predicates.find(table.name); it != predicates.end()) {
        plan.fixed_key = it->second;
      } else {
        plan.key_column = "s";
      }
      break;
  }
  return plan;
}

std::string names_csv(const NameManifest& manifest) {
  std::string out = "iri,table_name\n";
  for (const auto& [key, name] : manifest) csv::append_row(out, std::vector<std::string>{key, name});
  return out;
}

std::string markdown_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string decoded_options(const ResultMatrix& matrix, const Label& label) {
  const auto cfg = decode_label(matrix.space(), label.str());
  std::string out;
  for (std::size_t d = 0; d < matrix.space().dimension_count(); ++d) {
    if (d) out += ", ";
    out += matrix.space().dimension(d).name + "=" + matrix.space().option_of(cfg, d);
  }
  return out;
}

std::string top_k_markdown(const ResultMatrix& matrix, const RankingSet& set, std::size_t k) {
  const auto top = top_k(set, k);
  std::string out = "| Rank | Config | Score | Options |\n|---:|---|---:|---|\n";
  for (std::size_t i = 0; i < top.size(); ++i) {
    out += "| " + std::to_string(i + 1) + " | " + top.entries[i].label.str() + " | " +
           format_double(top.entries[i].score) + " | " +
           markdown_escape(decoded_options(matrix, top.entries[i].label)) + " |\n";
  }
  return out;
}

std::string combined_markdown(const std::vector<RankingSet>& sets, std::size_t k) {
  std::string out = "| Rank |";
  std::string rule = "|---:|";
  for (const auto& s : sets) {
    out += " " + markdown_escape(s.criterion) + " |";
    rule += "---|";
  }
  out += "\n" + rule + "\n";
  for (std::size_t i = 0; i < k; ++i) {
    out += "| " + std::to_string(i + 1) + " |";
    for (const auto& s : sets) out += " " + (i < s.size() ? s.entries[i].label.str() : std::string("-")) + " |";
    out += "\n";
  }
  return out;
}

std::vector<RankingSet> produce_all(const ResultMatrix& matrix, const std::vector<std::string>& names,
                                    const CriterionOptions& options) {
  const auto registry = CriterionRegistry::with_builtins();
  std::vector<RankingSet> out;
  for (const auto& name : names) out.push_back(registry.create(name, options)->produce(matrix));
  return out;
}

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

fs::path config_data_dir(const ExperimentConfig& config, const fs::path& out, const Configuration& c) {
  return out / config.dataset / schema_option(config, c) / partition_option(config, c).value_or("none") /
         std::string(to_string(storage_of(config, c)));
}

PrepareSummary prepare_data(const ExperimentConfig& config, const fs::path& input, const fs::path& out,
                            ParseMode mode, const ProgressFn& progress) {
  check_roles(config);
  PrepareSummary summary;
  const auto triples = read_ntriples_file(input, mode, &summary.stats);
  if (triples.empty()) {
    summary.warnings.push_back(input.string() + " contains no triples; every table will be empty");
  }
  note(progress, "parsed " + std::to_string(summary.stats.triples_parsed) + " triples, skipped " +
                     std::to_string(summary.stats.lines_skipped) + " lines");

  std::map<std::string, SchemaSet> schemas;
  std::map<std::string, std::string> schema_errors;
  for (const auto& c : enumerate(config.space)) {
    const Label label = encode_label(config.space, c);
    try {
      const auto sopt = schema_option(config, c);
      if (auto err = schema_errors.find(sopt); err != schema_errors.end()) throw SchemaError(err->second);
      auto it = schemas.find(sopt);
      if (it == schemas.end()) {
        try {
          it = schemas.emplace(sopt, build_schema(parse_schema_kind(sopt), triples, config.extvp)).first;
        } catch (const Error& e) {
          schema_errors[sopt] = e.what();
          throw;
        }
      }
      const SchemaSet& set = it->second;
      const auto popt = partition_option(config, c);
      const auto predicates = source_predicates(set);
      std::vector<PartitionedTable> parts;
      parts.reserve(set.tables.size());
      for (const auto& table : set.tables) {
        parts.push_back(partition(table, plan_for(set, table, popt, config.partitions, predicates)));
      }
      const auto dir = config_data_dir(config, out, c);
      if (fs::exists(dir)) fs::remove_all(dir);
      write_tables(parts, storage_of(config, c), dir);
      write_file(dir / "names.csv", names_csv(set.name_manifest));
      summary.prepared.push_back(label);
      note(progress, "prepared " + label.str() + " -> " + dir.string());
    } catch (const Error& e) {
      summary.failures.push_back({label, e.what()});
      note(progress, "failed " + label.str() + ": " + e.what());
    }
  }
  return summary;
}

WorkloadRun run_experiment(const ExperimentConfig& config, const Workload& workload, const fs::path& data_dir,
                           const fs::path& log_path, const ProgressFn& progress) {
  const auto ids = workload.select(config.query_ids, config.query_count);
  std::vector<std::string> schema_options;
  if (config.roles.schema) schema_options = config.space.dimension(*config.roles.schema).options;
  workload.validate(ids, schema_options);
  RunOptions options{config.dataset, config.runs, progress};
  auto provider = [&](const Configuration& c) { return read_manifest(config_data_dir(config, data_dir, c)); };
  auto run = run_workload(workload, ids, config.space, config.roles.schema, provider, options);
  write_log_file(log_path, run.records);
  return run;
}

ResultMatrix load_matrix(const ExperimentConfig& config, const fs::path& log_path, const AggregateOptions& options) {
  return aggregate(ingest_log_file(log_path, config.space), config.space, options);
}

std::vector<std::string> default_criteria(const ResultMatrix& matrix) {
  std::vector<std::string> out;
  for (const auto& d : matrix.space().dimensions()) {
    if (d.options.size() >= 2) out.push_back("sd:" + d.name);
  }
  const std::size_t varying = out.size();
  out.push_back("pareto_q");
  if (varying >= 1) out.push_back("pareto_agg");
  if (varying == 3 && matrix.space().dimension_count() == 3) out.push_back("rta");
  return out;
}

RankOutput rank_matrix(const ResultMatrix& matrix, const RankRequest& request, const fs::path& out) {
  if (request.k == 0) throw CriterionError("k must be at least 1");
  if (request.k > matrix.config_count()) {
    throw CriterionError("k = " + std::to_string(request.k) + " exceeds the " +
                         std::to_string(matrix.config_count()) + " configurations in the space");
  }
  const auto names = request.criteria.empty() ? default_criteria(matrix) : request.criteria;
  const auto registry = CriterionRegistry::with_builtins();
  RankOutput result;
  const std::string suffix = "_top" + std::to_string(request.k);
  for (const auto& name : names) {
    const auto criterion = registry.create(name, request.options);
    auto set = criterion->produce(matrix);
    const auto stem = file_stem(set.criterion);
    result.files.push_back(out / (stem + ".csv"));
    write_file(result.files.back(), encode_ranking_csv(set));
    result.files.push_back(out / (stem + suffix + ".md"));
    write_file(result.files.back(), top_k_markdown(matrix, set, request.k));
    if (request.plots) {
      for (auto& p : criterion->plot(matrix, set, out)) result.files.push_back(std::move(p));
    }
    result.sets.push_back(std::move(set));
  }
  result.files.push_back(out / ("top" + std::to_string(request.k) + ".md"));
  write_file(result.files.back(), combined_markdown(result.sets, request.k));
  return result;
}

std::vector<MetricRow> evaluate_matrices(const std::vector<std::string>& dataset_names,
                                         const std::vector<ResultMatrix>& matrices, const EvaluateRequest& request) {
  if (matrices.empty()) throw EvaluationError("no result matrices to evaluate");
  if (dataset_names.size() != matrices.size()) throw EvaluationError("one dataset name per matrix is required");
  for (std::size_t i = 1; i < matrices.size(); ++i) {
    if (matrices[i].labels() != matrices[0].labels() || !(matrices[i].space() == matrices[0].space())) {
      throw EvaluationError("matrices for '" + dataset_names[0] + "' and '" + dataset_names[i] +
                            "' cover different configuration spaces");
    }
  }
  const auto names = request.criteria.empty() ? default_criteria(matrices[0]) : request.criteria;
  std::vector<MetricRow> rows;
  for (const auto& name : names) {
    std::vector<RankingSet> sets;
    for (const auto& m : matrices) sets.push_back(produce_all(m, {name}, request.options).front());
    const std::string criterion = sets.front().criterion;
    for (std::size_t i = 0; i < matrices.size(); ++i) {
      rows.push_back({criterion, "conformance", dataset_names[i],
                      conformance(sets[i], matrices[i], request.k, request.h)});
    }
    for (std::size_t i = 0; i < matrices.size(); ++i) {
      for (std::size_t j = i + 1; j < matrices.size(); ++j) {
        const auto a = request.coherence_top ? top_k(sets[i], request.coherence_top) : sets[i];
        const auto b = request.coherence_top ? top_k(sets[j], request.coherence_top) : sets[j];
        rows.push_back({criterion, "coherence", dataset_names[i] + "/" + dataset_names[j],
                        coherence(a, b, request.mode)});
      }
    }
  }
  return rows;
}

std::string encode_metrics_csv(const std::vector<MetricRow>& rows, const EvaluateRequest& request) {
  std::string out = "criterion,metric,datasets,k,h,coherence_mode,value\n";
  for (const auto& r : rows) {
    csv::append_row(out, std::vector<std::string>{r.criterion, r.metric, r.datasets, std::to_string(request.k),
                                                  std::to_string(request.h), std::string(to_string(request.mode)),
                                                  format_double(r.value)});
  }
  return out;
}

std::string encode_metrics_markdown(const std::vector<MetricRow>& rows, const EvaluateRequest&) {
  std::vector<std::string> criteria;
  std::vector<std::string> columns;
  std::map<std::pair<std::string, std::string>, double> cells;
  for (const auto& r : rows) {
    if (std::find(criteria.begin(), criteria.end(), r.criterion) == criteria.end()) criteria.push_back(r.criterion);
    const std::string col = (r.metric == "conformance" ? "A(" : "K(") + r.datasets + ")";
    if (std::find(columns.begin(), columns.end(), col) == columns.end()) columns.push_back(col);
    cells[{r.criterion, col}] = r.value;
  }
  std::string out = "| Criterion |";
  std::string rule = "|---|";
  for (const auto& c : columns) {
    out += " " + markdown_escape(c) + " |";
    rule += "---:|";
  }
  out += "\n" + rule + "\n";
  for (const auto& crit : criteria) {
    out += "| " + markdown_escape(crit) + " |";
    for (const auto& c : columns) {
      auto it = cells.find({crit, c});
      out += " " + (it == cells.end() ? std::string("-") : two_decimals(it->second)) + " |";
    }
    out += "\n";
  }
  return out;
}

std::vector<fs::path> write_report(const ResultMatrix& matrix, const std::optional<std::string>& dimension,
                                   const std::vector<Slice>& slices, const fs::path& out,
                                   OptionAggregator aggregator) {
  std::vector<fs::path> files;
  files.push_back(out / "matrix.csv");
  write_file(files.back(), encode_matrix_csv(matrix));

  const auto ranking = per_query_rankings(matrix);
  std::string pq = "query,rank,config,runtime_ms\n";
  for (std::size_t q = 0; q < matrix.query_count(); ++q) {
    for (std::size_t r = 0; r < ranking.order[q].size(); ++r) {
      const auto c = ranking.order[q][r];
      csv::append_row(pq, std::vector<std::string>{matrix.queries()[q], std::to_string(r + 1),
                                                   matrix.labels()[c].str(), format_double(matrix.at(c, q))});
    }
  }
  files.push_back(out / "per_query_rankings.csv");
  write_file(files.back(), pq);

  const auto& dims = matrix.space().dimensions();
  for (const auto& target : dims) {
    for (const auto& varying : dims) {
      if (target.name == varying.name) continue;
      const auto rows = dimension_impact(matrix, target.name, varying.name);
      const std::string stem = "impact_" + target.name + "_by_" + varying.name;
      files.push_back(out / (stem + ".csv"));
      write_file(files.back(), encode_impact_csv(rows, target.name, varying.name));
      std::vector<svg::RangeBar> bars;
      for (const auto& r : rows) bars.push_back({r.target_option + " / " + r.varying_option, r.min, r.mean, r.max});
      files.push_back(out / (stem + ".svg"));
      write_file(files.back(),
                 svg::range_bars("Impact of " + varying.name + " on " + target.name, "runtime (ms)", bars));
    }
  }

  if (dimension) {
    std::vector<NamedFilter> filters;
    filters.push_back({"all", {}});
    for (const auto& s : slices) filters.push_back({s.name, parse_filter_expression(s.expression)});
    const auto columns = global_ranking_table(matrix, *dimension, filters, aggregator);
    const std::string stem = "global_ranking_" + *dimension;
    files.push_back(out / (stem + ".csv"));
    write_file(files.back(), encode_global_ranking_csv(matrix, *dimension, columns));
    files.push_back(out / (stem + ".md"));
    write_file(files.back(), encode_global_ranking_markdown(matrix, *dimension, columns));
  }
  return files;
}

void write_run_manifest(const fs::path& out, const std::string& command, const fs::path& config_path,
                        const std::string& dataset, const std::vector<fs::path>& outputs) {
  nlohmann::ordered_json j;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["config"] = config_path.string();
  j["dataset"] = dataset;
  j["created_utc"] = timestamp_utc();
  auto& list = j["outputs"] = nlohmann::ordered_json::array();
  for (const auto& p : outputs) list.push_back(p.lexically_relative(out).generic_string());
  write_file(out / "run_manifest.json", j.dump(2) + "\n");
}

}  // namespace ppa
