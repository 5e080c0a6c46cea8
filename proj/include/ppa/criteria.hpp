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

#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ppa/ranking.hpp"
#include "ppa/results.hpp"

namespace ppa {

struct CriterionOptions {
  OptionAggregator aggregator = OptionAggregator::kMean;
};

/// A ranking criterion: turns a result matrix into a ranking set, and may
/// render its own plots.
class Criterion {
 public:
  virtual ~Criterion() = default;

  virtual std::string name() const = 0;
  virtual RankingSet produce(const ResultMatrix& matrix) const = 0;
  /// Writes plot/data files into `dir` and returns their paths.
  virtual std::vector<std::filesystem::path> plot(const ResultMatrix& matrix, const RankingSet& set,
                                                  const std::filesystem::path& dir) const;
};

/// Single-dimensional criterion "sd:<dimension>".
class SdCriterion : public Criterion {
 public:
  SdCriterion(std::string dimension, CriterionOptions options)
      : dimension_(std::move(dimension)), options_(options) {}
  std::string name() const override { return "sd:" + dimension_; }
  RankingSet produce(const ResultMatrix& matrix) const override;
  std::vector<std::filesystem::path> plot(const ResultMatrix& matrix, const RankingSet& set,
                                          const std::filesystem::path& dir) const override;

 private:
  std::string dimension_;
  CriterionOptions options_;
};

class ParetoQCriterion : public Criterion {
 public:
  std::string name() const override { return "pareto_q"; }
  RankingSet produce(const ResultMatrix& matrix) const override;
  std::vector<std::filesystem::path> plot(const ResultMatrix& matrix, const RankingSet& set,
                                          const std::filesystem::path& dir) const override;
};

class ParetoAggCriterion : public Criterion {
 public:
  explicit ParetoAggCriterion(CriterionOptions options) : options_(options) {}
  std::string name() const override { return "pareto_agg"; }
  RankingSet produce(const ResultMatrix& matrix) const override;
  std::vector<std::filesystem::path> plot(const ResultMatrix& matrix, const RankingSet& set,
                                          const std::filesystem::path& dir) const override;

 private:
  CriterionOptions options_;
};

class RtaCriterion : public Criterion {
 public:
  explicit RtaCriterion(CriterionOptions options) : options_(options) {}
  std::string name() const override { return "rta"; }
  RankingSet produce(const ResultMatrix& matrix) const override;
  std::vector<std::filesystem::path> plot(const ResultMatrix& matrix, const RankingSet& set,
                                          const std::filesystem::path& dir) const override;

 private:
  CriterionOptions options_;
};

/// Name -> factory. A key registered as "sd" serves every "sd:<arg>" name.
class CriterionRegistry {
 public:
  using Factory = std::function<std::unique_ptr<Criterion>(std::string_view argument, const CriterionOptions&)>;

  void add(std::string key, Factory factory);
  /// Throws CriterionError for unknown names.
  std::unique_ptr<Criterion> create(std::string_view name, const CriterionOptions& options = {}) const;
  std::vector<std::string> keys() const;

  /// sd, pareto_q, pareto_agg, rta.
  static CriterionRegistry with_builtins();

 private:
  std::map<std::string, Factory, std::less<>> factories_;
};

/// Criterion name as a file stem ("sd:schema" -> "sd_schema").
std::string file_stem(std::string_view criterion);

}  // namespace ppa
