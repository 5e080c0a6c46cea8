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

#include "ppa/experiment_config.hpp"

#include <yaml-cpp/yaml.h>

#include <cctype>

#include "ppa/error.hpp"

namespace ppa {

namespace {

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::vector<std::string> string_list(const YAML::Node& node, const std::string& what) {
  if (!node.IsSequence()) throw ConfigFileError(what + " must be a list");
  std::vector<std::string> out;
  for (const auto& item : node) {
    if (!item.IsScalar()) throw ConfigFileError(what + " entries must be scalars");
    out.push_back(item.as<std::string>());
  }
  return out;
}

std::map<std::string, std::vector<std::string>> option_map(const YAML::Node& node, const std::string& what) {
  if (!node.IsMap()) throw ConfigFileError(what + " must map dimension names to option lists");
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& kv : node) {
    const auto name = kv.first.as<std::string>();
    out[name] = string_list(kv.second, what + "." + name);
  }
  return out;
}

std::size_t positive(const YAML::Node& node, const std::string& what) {
  long long v = 0;
  try {
    v = node.as<long long>();
  } catch (const YAML::Exception&) {
    throw ConfigFileError(what + " must be an integer");
  }
  if (v < 1) throw ConfigFileError(what + " must be at least 1");
  return static_cast<std::size_t>(v);
}

}  // namespace

DimensionRoles DimensionRoles::detect(const ConfigSpace& space) {
  DimensionRoles roles;
  for (std::size_t i = 0; i < space.dimension_count(); ++i) {
    const auto name = lower(space.dimension(i).name);
    if (name == "schema" || name == "schemas") roles.schema = i;
    else if (name == "partition" || name == "partitions" || name == "partitioning") roles.partition = i;
    else if (name == "storage" || name == "format" || name == "formats") roles.storage = i;
  }
  return roles;
}

StorageFormat ExperimentConfig::format_for(const std::string& option) const {
  if (auto it = storage_formats.find(option); it != storage_formats.end()) return it->second;
  return parse_storage_format(option);
}

ExperimentConfig parse_experiment_config(const std::string& yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw ConfigFileError(std::string("invalid YAML: ") + e.what());
  }
  if (!root.IsMap()) throw ConfigFileError("config must be a YAML mapping");

  ExperimentConfig cfg;
  if (root["dataset"]) cfg.dataset = root["dataset"].as<std::string>();
  if (cfg.dataset.empty()) throw ConfigFileError("dataset name is empty");

  const auto dims = root["dimensions"];
  if (!dims || !dims.IsMap()) throw ConfigFileError("missing 'dimensions' mapping");
  std::vector<DimensionSpec> specs;
  for (const auto& kv : dims) {
    const auto name = kv.first.as<std::string>();
    if (kv.second.IsNull()) {
      cfg.omitted_dimensions.push_back(name);
      continue;
    }
    auto options = string_list(kv.second, "dimensions." + name);
    if (options.empty()) throw ConfigFileError("dimension '" + name + "' has no options");
    specs.push_back({name, std::move(options)});
  }
  if (specs.empty()) throw ConfigFileError("every dimension is null");
  cfg.declared = ConfigSpace(std::move(specs));

  SpaceFilter filter;
  if (root["include"]) filter.include = option_map(root["include"], "include");
  if (root["exclude"]) filter.exclude = option_map(root["exclude"], "exclude");
  try {
    validate_filter(cfg.declared, filter);
    cfg.space = filter.empty() ? cfg.declared : filter_space(cfg.declared, filter);
  } catch (const ConfigSpaceError& e) {
    throw ConfigFileError(e.what());
  }

  if (const auto q = root["query"]) {
    if (q.IsSequence()) {
      cfg.query_ids = string_list(q, "query");
      if (cfg.query_ids.empty()) throw ConfigFileError("query list is empty");
    } else {
      cfg.query_count = positive(q, "query");
    }
  }
  if (root["runs"]) cfg.runs = positive(root["runs"], "runs");
  if (root["partitions"]) cfg.partitions = positive(root["partitions"], "partitions");

  if (const auto sf = root["storage_formats"]) {
    if (!sf.IsMap()) throw ConfigFileError("storage_formats must be a mapping");
    for (const auto& kv : sf) {
      cfg.storage_formats[kv.first.as<std::string>()] = parse_storage_format(kv.second.as<std::string>());
    }
  }

  if (const auto ev = root["extvp"]) {
    if (ev["join_kinds"]) {
      cfg.extvp.join_kinds.clear();
      for (const auto& k : string_list(ev["join_kinds"], "extvp.join_kinds")) {
        cfg.extvp.join_kinds.push_back(parse_join_kind(k));
      }
    }
    if (ev["selectivity_threshold"]) cfg.extvp.selectivity_threshold = ev["selectivity_threshold"].as<double>();
    try {
      cfg.extvp.validate();
    } catch (const SchemaError& e) {
      throw ConfigFileError(e.what());
    }
  }

  cfg.roles = DimensionRoles::detect(cfg.space);
  if (cfg.roles.storage) {
    for (const auto& opt : cfg.space.dimension(*cfg.roles.storage).options) {
      try {
        (void)cfg.format_for(opt);
      } catch (const StorageError& e) {
        throw ConfigFileError(e.what());
      }
    }
  }
  return cfg;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  return parse_experiment_config(read_file(path));
}

}  // namespace ppa
