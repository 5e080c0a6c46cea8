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

#include <string>
#include <utility>
#include <vector>

#include "ppa/ranking.hpp"

namespace ppa::svg {

/// Grouped bars: per option, one bar per rank position counting placements,
/// annotated with the option's rank score.
std::string rank_score_bars(const SdScoreTable& table);

/// Outer (all scores = 1) and inner triangle for one configuration; the three
/// axes are 120 degrees apart.
std::string triangle(const std::string& title, const std::vector<std::string>& axis_names, double rs, double rp,
                     double rf);

struct ScatterPoint {
  double x = 0.0;
  double y = 0.0;
  bool highlighted = false;
  std::string label;
};

std::string scatter(const std::string& title, const std::string& x_name, const std::string& y_name,
                    const std::vector<ScatterPoint>& points);

struct RangeBar {
  std::string label;
  double min = 0.0;
  double mean = 0.0;
  double max = 0.0;
};

/// Horizontal min-max ranges with a mean marker (box-plot style summary).
std::string range_bars(const std::string& title, const std::string& value_name, const std::vector<RangeBar>& bars);

std::string escape(const std::string& text);

}  // namespace ppa::svg
