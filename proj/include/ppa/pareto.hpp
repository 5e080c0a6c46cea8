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

#include <cstddef>
#include <vector>

namespace ppa {

enum class Sense { kMinimize, kMaximize };

/// Under minimisation u dominates v iff u <= v componentwise and u != v.
bool dominates(const std::vector<double>& u, const std::vector<double>& v, Sense sense);

struct ParetoResult {
  Sense sense = Sense::kMinimize;
  /// fronts[0] is the non-dominated set; indices ascend within a front.
  std::vector<std::vector<std::size_t>> fronts;
  std::vector<std::size_t> front_of;
  /// Per point, within its own front. Boundary points get +infinity.
  std::vector<double> crowding;
};

/// Exact non-dominated sorting (fronts peeled iteratively) with NSGA-II
/// crowding distance. Throws Error for ragged or zero-length vectors.
ParetoResult nondominated_sort(const std::vector<std::vector<double>>& objectives, Sense sense);

}  // namespace ppa
