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

#include "ppa/criteria.hpp"

#include <cmath>

#include "ppa/csv.hpp"
#include "ppa/error.hpp"
#include "ppa/storage.hpp"
#include "ppa/svg.hpp"

namespace ppa {

namespace fs = std::filesystem;

namespace {

std::string points_csv(const ResultMatrix& matrix, const std::vector<std::string>& objective_names,
                       const std::vector<std::vector<double>>& objectives, const ParetoResult& fronts) {
  std::string out;
  std::vector<std::string> header{"config"};
  header.insert(header.end(), objective_names.begin(), objective_names.end());
  header.push_back("front");
  header.push_back("crowding");
  csv::append_row(out, header);
  for (std::size_t c = 0; c < matrix.config_count(); ++c) {
    std::vector<std::string> row{matrix.labels()[c].str()};
    for (double v : objectives[c]) row.push_back(format_double(v));
    row.push_back(std::to_string(fronts.front_of[c]));
    row.push_back(std::isinf(fronts.crowding[c]) ? "inf" : format_double(fronts.crowding[c]));
    csv::append_row(out, row);
  }
  return out;
}

}  // namespace

std::vector<fs::path> Criterion::plot(const ResultMatrix&, const RankingSet&, const fs::path&) const { return {}; }

RankingSet SdCriterion::produce(const ResultMatrix& matrix) const {
  return sd_ranking_set(matrix, sd_scores(matrix, dimension_, options_.aggregator));
}

std::vector<fs::path> SdCriterion::plot(const ResultMatrix& matrix, const RankingSet&, const fs::path& dir) const {
  const auto path = dir / (file_stem(name()) + ".svg");
  write_file(path, svg::rank_score_bars(sd_scores(matrix, dimension_, options_.aggregator)));
  return {path};
}

RankingSet ParetoQCriterion::produce(const ResultMatrix& matrix) const { return pareto_q(matrix); }

std::vector<fs::path> ParetoQCriterion::plot(const ResultMatrix& matrix, const RankingSet&, const fs::path& dir) const {
  std::vector<std::vector<double>> objectives(matrix.config_count());
  for (std::size_t c = 0; c < matrix.config_count(); ++c) {
    for (std::size_t q = 0; q < matrix.query_count(); ++q) objectives[c].push_back(matrix.at(c, q));
  }
  const auto path = dir / "pareto_q_points.csv";
  write_file(path, points_csv(matrix, matrix.queries(), objectives, pareto_q_fronts(matrix)));
  return {path};
}

RankingSet ParetoAggCriterion::produce(const ResultMatrix& matrix) const {
  return pareto_agg(matrix, all_sd_scores(matrix, options_.aggregator));
}

std::vector<fs::path> ParetoAggCriterion::plot(const ResultMatrix& matrix, const RankingSet&, const fs::path& dir) const {
  const auto tables = all_sd_scores(matrix, options_.aggregator);
  const auto objectives = pareto_agg_objectives(matrix, tables);
  const auto fronts = nondominated_sort(objectives, Sense::kMaximize);
  std::vector<std::string> names;
  for (const auto& t : tables) names.push_back("R_" + t.dimension);

  std::vector<fs::path> written{dir / "pareto_agg_points.csv"};
  write_file(written.back(), points_csv(matrix, names, objectives, fronts));
  // 2D projections of the score space
  for (std::size_t a = 0; a < names.size(); ++a) {
    for (std::size_t b = a + 1; b < names.size(); ++b) {
      std::vector<svg::ScatterPoint> points;
      for (std::size_t c = 0; c < matrix.config_count(); ++c) {
        points.push_back({objectives[c][a], objectives[c][b], fronts.front_of[c] == 0, matrix.labels()[c].str()});
      }
      written.push_back(dir / ("pareto_agg_" + tables[a].dimension + "_" + tables[b].dimension + ".svg"));
      write_file(written.back(), svg::scatter("Pareto_Agg (front 0 highlighted)", names[a], names[b], points));
    }
  }
  return written;
}

RankingSet RtaCriterion::produce(const ResultMatrix& matrix) const {
  return rta_ranking_set(matrix, all_sd_scores(matrix, options_.aggregator));
}

std::vector<fs::path> RtaCriterion::plot(const ResultMatrix& matrix, const RankingSet&, const fs::path& dir) const {
  const auto tables = all_sd_scores(matrix, options_.aggregator);
  if (tables.size() != 3) throw CriterionError("triangle-area plots need exactly 3 dimensions");
  std::vector<std::string> axes;
  std::vector<std::size_t> dims;
  for (const auto& t : tables) {
    axes.push_back("R_" + t.dimension);
    dims.push_back(matrix.space().require_dimension(t.dimension));
  }
  std::vector<fs::path> written;
  for (std::size_t c = 0; c < matrix.config_count(); ++c) {
    const auto& cfg = matrix.configs()[c];
    const auto& label = matrix.labels()[c].str();
    auto score = [&](std::size_t i) { return tables[i].score_of(matrix.space().option_of(cfg, dims[i])); };
    written.push_back(dir / "rta_triangles" / (label + ".svg"));
    write_file(written.back(), svg::triangle(label, axes, score(0), score(1), score(2)));
  }
  return written;
}

void CriterionRegistry::add(std::string key, Factory factory) { factories_[std::move(key)] = std::move(factory); }

std::unique_ptr<Criterion> CriterionRegistry::create(std::string_view name, const CriterionOptions& options) const {
  std::string_view key = name;
  std::string_view argument;
  if (auto colon = name.find(':'); colon != std::string_view::npos) {
    key = name.substr(0, colon);
    argument = name.substr(colon + 1);
  }
  auto it = factories_.find(key);
  if (it == factories_.end()) throw CriterionError("unknown criterion '" + std::string(name) + "'");
  return it->second(argument, options);
}

std::vector<std::string> CriterionRegistry::keys() const {
  std::vector<std::string> out;
  for (const auto& [k, f] : factories_) out.push_back(k);
  return out;
}

CriterionRegistry CriterionRegistry::with_builtins() {
  CriterionRegistry reg;
  reg.add("sd", [](std::string_view arg, const CriterionOptions& o) -> std::unique_ptr<Criterion> {
    if (arg.empty()) throw CriterionError("sd criterion needs a dimension, e.g. sd:schema");
    return std::make_unique<SdCriterion>(std::string(arg), o);
  });
  auto no_argument = [](std::string_view name, std::string_view arg) {
    if (!arg.empty()) throw CriterionError("criterion '" + std::string(name) + "' takes no argument");
  };
  reg.add("pareto_q", [no_argument](std::string_view arg, const CriterionOptions&) -> std::unique_ptr<Criterion> {
    no_argument("pareto_q", arg);
    return std::make_unique<ParetoQCriterion>();
  });
  reg.add("pareto_agg", [no_argument](std::string_view arg, const CriterionOptions& o) -> std::unique_ptr<Criterion> {
    no_argument("pareto_agg", arg);
    return std::make_unique<ParetoAggCriterion>(o);
  });
  reg.add("rta", [no_argument](std::string_view arg, const CriterionOptions& o) -> std::unique_ptr<Criterion> {
    no_argument("rta", arg);
    return std::make_unique<RtaCriterion>(o);
  });
  return reg;
}

std::string file_stem(std::string_view criterion) {
  std::string out(criterion);
  for (auto& c : out) {
    if (c == ':' || c == '/' || c == '\\') c = '_';
  }
  return out;
}

}  // namespace ppa
