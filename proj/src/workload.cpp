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

#include "ppa/workload.hpp"

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <cmath>
#include <set>

#include "ppa/csv.hpp"
#include "ppa/error.hpp"
#include "ppa/sql.hpp"

namespace ppa {

Workload Workload::parse(const std::string& yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw ConfigFileError(std::string("invalid workload YAML: ") + e.what());
  }
  const auto queries = root["queries"];
  if (!queries || !queries.IsMap()) throw ConfigFileError("workload needs a 'queries' mapping");
  Workload w;
  for (const auto& kv : queries) {
    const auto id = kv.first.as<std::string>();
    if (w.entries_.count(id)) throw ConfigFileError("duplicate query id '" + id + "'");
    Entry entry;
    if (kv.second.IsScalar()) {
      entry.shared = kv.second.as<std::string>();
    } else if (kv.second.IsMap()) {
      for (const auto& per : kv.second) entry.per_schema[per.first.as<std::string>()] = per.second.as<std::string>();
    } else {
      throw ConfigFileError("query '" + id + "' must be SQL text or a schema -> SQL mapping");
    }
    w.ids_.push_back(id);
    w.entries_.emplace(id, std::move(entry));
  }
  return w;
}

Workload Workload::load(const std::filesystem::path& path) { return parse(read_file(path)); }

bool Workload::has_query(std::string_view id) const { return entries_.find(id) != entries_.end(); }

const std::string& Workload::sql_for(std::string_view id, std::string_view schema_option) const {
  auto it = entries_.find(id);
  if (it == entries_.end()) throw ConfigFileError("workload has no query '" + std::string(id) + "'");
  const Entry& e = it->second;
  if (e.per_schema.empty()) return e.shared;
  auto sql = e.per_schema.find(std::string(schema_option));
  if (sql == e.per_schema.end()) {
    throw ConfigFileError("query '" + std::string(id) + "' has no SQL for schema '" + std::string(schema_option) + "'");
  }
  return sql->second;
}

std::vector<std::string> Workload::select(const std::vector<std::string>& ids,
                                          std::optional<std::size_t> count) const {
  if (!ids.empty()) {
    for (const auto& id : ids) {
      if (!has_query(id)) throw ConfigFileError("workload has no query '" + id + "'");
    }
    return ids;
  }
  if (count) {
    if (*count > ids_.size()) {
      throw ConfigFileError("config asks for " + std::to_string(*count) + " queries, workload has " +
                            std::to_string(ids_.size()));
    }
    return {ids_.begin(), ids_.begin() + static_cast<std::ptrdiff_t>(*count)};
  }
  return ids_;
}

void Workload::validate(const std::vector<std::string>& ids, const std::vector<std::string>& schema_options) const {
  for (const auto& id : ids) {
    for (const auto& opt : schema_options) (void)sql_for(id, opt);
  }
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw Error("cannot format number");
  return std::string(buf, ptr);
}

std::string encode_log_csv(const std::vector<LogRecord>& records) {
  std::string out(kLogHeader);
  out += '\n';
  for (const auto& r : records) {
    csv::append_row(out, std::vector<std::string>{r.dataset, r.config.str(), r.query, std::to_string(r.run),
                                                  format_double(r.runtime_ms)});
  }
  return out;
}

void write_log_file(const std::filesystem::path& path, const std::vector<LogRecord>& records) {
  write_file(path, encode_log_csv(records));
}

std::vector<LogRecord> ingest_logs(std::string_view csv_text, const ConfigSpace& space) {
  csv::Reader reader(csv_text);
  std::vector<std::string> fields;
  if (!reader.next(fields)) throw LogError("log is empty (missing header)");
  std::string header;
  for (std::size_t i = 0; i < fields.size(); ++i) header += (i ? "," : "") + fields[i];
  if (header != kLogHeader) throw LogError("log header must be '" + std::string(kLogHeader) + "'");

  std::vector<LogRecord> out;
  std::size_t row = 0;
  while (reader.next(fields)) {
    ++row;
    if (fields.size() != 5) throw LogError(row, "expected 5 fields, found " + std::to_string(fields.size()));
    LogRecord rec;
    rec.dataset = fields[0];
    if (rec.dataset.empty()) throw LogError(row, "empty dataset");
    try {
      (void)decode_label(space, fields[1]);
    } catch (const LabelError& e) {
      throw LogError(row, e.what());
    }
    rec.config = Label(fields[1]);
    rec.query = fields[2];
    if (rec.query.empty()) throw LogError(row, "empty query id");
    {
      const auto& f = fields[3];
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), rec.run);
      if (ec != std::errc() || ptr != f.data() + f.size() || rec.run < 1) {
        throw LogError(row, "run must be a positive integer, got '" + f + "'");
      }
    }
    {
      const auto& f = fields[4];
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), rec.runtime_ms);
      if (ec != std::errc() || ptr != f.data() + f.size() || !std::isfinite(rec.runtime_ms)) {
        throw LogError(row, "malformed runtime_ms '" + f + "'");
      }
      if (rec.runtime_ms <= 0.0) throw LogError(row, "runtime_ms must be positive, got " + f);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<LogRecord> ingest_log_file(const std::filesystem::path& path, const ConfigSpace& space) {
  return ingest_logs(read_file(path), space);
}

WorkloadRun run_workload(const Workload& workload, const std::vector<std::string>& query_ids,
                         const ConfigSpace& space, std::optional<std::size_t> schema_dimension,
                         const ManifestProvider& manifests, const RunOptions& options) {
  if (options.runs < 1) throw ConfigFileError("runs must be at least 1");
  std::vector<std::string> schema_options{""};
  if (schema_dimension) schema_options = space.dimension(*schema_dimension).options;
  workload.validate(query_ids, schema_options);

  WorkloadRun out;
  for (const auto& config : enumerate(space)) {
    const Label label = encode_label(space, config);
    const std::string schema = schema_dimension ? space.option_of(config, *schema_dimension) : std::string();
    std::vector<LogRecord> records;
    std::vector<QueryOutcome> outcomes;
    try {
      StorageManifest manifest = manifests(config);
      for (const auto& id : query_ids) {
        const auto ast = sql::parse_sql(workload.sql_for(id, schema));
        std::size_t rows = 0;
        for (std::size_t run = 1; run <= options.runs; ++run) {
          // fresh source per run: partitions are re-read every time
          sql::ManifestSource source(manifest);
          auto result = sql::execute(ast, source);
          rows = result.rows.size();
          records.push_back({options.dataset, label, id, run, std::max(result.elapsed_ms, 1e-6)});
        }
        outcomes.push_back({label, id, rows});
      }
    } catch (const Error& e) {
      out.failures.push_back({label, e.what()});
      if (options.progress) options.progress(label.str() + ": FAILED " + e.what());
      continue;
    }
    if (options.progress) {
      options.progress(label.str() + ": " + std::to_string(records.size()) + " executions");
    }
    out.records.insert(out.records.end(), records.begin(), records.end());
    out.outcomes.insert(out.outcomes.end(), outcomes.begin(), outcomes.end());
  }
  return out;
}

}  // namespace ppa
