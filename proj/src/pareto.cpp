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

#include "ppa/pareto.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ppa/error.hpp"

namespace ppa {

bool dominates(const std::vector<double>& u, const std::vector<double>& v, Sense sense) {
  bool strictly_better = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double a = sense == Sense::kMinimize ? u[i] : -u[i];
    const double b = sense == Sense::kMinimize ? v[i] : -v[i];
    if (a > b) return false;
    if (a < b) strictly_better = true;
  }
  return strictly_better;
}

namespace {

void assign_crowding(const std::vector<std::vector<double>>& objectives, const std::vector<std::size_t>& front,
                     std::vector<double>& crowding) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  for (auto i : front) crowding[i] = 0.0;
  if (front.size() <= 2) {
    for (auto i : front) crowding[i] = kInf;
    return;
  }
  const std::size_t m = objectives[front[0]].size();
  std::vector<std::size_t> sorted = front;
  for (std::size_t k = 0; k < m; ++k) {
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](auto a, auto b) { return objectives[a][k] < objectives[b][k]; });
    const double lo = objectives[sorted.front()][k];
    const double hi = objectives[sorted.back()][k];
    crowding[sorted.front()] = kInf;
    crowding[sorted.back()] = kInf;
    if (hi == lo) continue;
    for (std::size_t p = 1; p + 1 < sorted.size(); ++p) {
      crowding[sorted[p]] += (objectives[sorted[p + 1]][k] - objectives[sorted[p - 1]][k]) / (hi - lo);
    }
  }
}

}  // namespace

ParetoResult nondominated_sort(const std::vector<std::vector<double>>& objectives, Sense sense) {
  ParetoResult out;
  out.sense = sense;
  const std::size_t n = objectives.size();
  if (n == 0) return out;
  const std::size_t m = objectives[0].size();
  if (m == 0) throw Error("objective vectors must have at least one component");
  for (const auto& v : objectives) {
    if (v.size() != m) throw Error("objective vectors have different lengths");
  }

  // Deb's bookkeeping: who each point dominates, and how many dominate it.
  std::vector<std::vector<std::size_t>> dominated(n);
  std::vector<std::size_t> dominators(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dominates(objectives[i], objectives[j], sense)) {
        dominated[i].push_back(j);
        ++dominators[j];
      } else if (dominates(objectives[j], objectives[i], sense)) {
        dominated[j].push_back(i);
        ++dominators[i];
      }
    }
  }

  out.front_of.assign(n, 0);
  std::vector<std::size_t> current;
  for (std::size_t i = 0; i < n; ++i) {
    if (dominators[i] == 0) current.push_back(i);
  }
  while (!current.empty()) {
    std::vector<std::size_t> next;
    for (auto i : current) {
      out.front_of[i] = out.fronts.size();
      for (auto j : dominated[i]) {
        if (--dominators[j] == 0) next.push_back(j);
      }
    }
    std::sort(current.begin(), current.end());
    out.fronts.push_back(std::move(current));
    current = std::move(next);
  }

  out.crowding.assign(n, 0.0);
  for (const auto& front : out.fronts) assign_crowding(objectives, front, out.crowding);
  return out;
}

}  // namespace ppa
