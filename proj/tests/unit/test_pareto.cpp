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

#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "ppa/error.hpp"
#include "ppa/pareto.hpp"

using namespace ppa;

TEST_CASE("dominance") {
  CHECK(dominates({1, 2}, {2, 2}, Sense::kMinimize));
  CHECK_FALSE(dominates({1, 2}, {1, 2}, Sense::kMinimize));
  CHECK_FALSE(dominates({1, 3}, {2, 2}, Sense::kMinimize));
  CHECK(dominates({2, 2}, {1, 2}, Sense::kMaximize));
}

TEST_CASE("small fronts") {
  const auto one = nondominated_sort({{4, 4}}, Sense::kMinimize);
  CHECK(one.fronts.size() == 1);
  CHECK(std::isinf(one.crowding[0]));

  const auto r = nondominated_sort({{1, 2}, {2, 1}, {3, 3}}, Sense::kMinimize);
  REQUIRE(r.fronts.size() == 2);
  CHECK(r.fronts[0] == std::vector<std::size_t>{0, 1});
  CHECK(r.fronts[1] == std::vector<std::size_t>{2});
  CHECK(r.front_of == std::vector<std::size_t>{0, 0, 1});

  const auto dup = nondominated_sort({{1, 1}, {1, 1}}, Sense::kMinimize);
  CHECK(dup.fronts.size() == 1);
}

TEST_CASE("crowding distance by hand") {
  // front 0: four trade-off points; (5,5,5) is dominated
  const auto r = nondominated_sort({{1, 4, 4}, {2, 3, 3.5}, {3, 2, 3}, {4, 1, 2}, {5, 5, 5}}, Sense::kMinimize);
  REQUIRE(r.fronts.size() == 2);
  CHECK(r.fronts[0] == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(std::isinf(r.crowding[0]));
  CHECK(std::isinf(r.crowding[3]));
  CHECK(r.crowding[1] == doctest::Approx(2.0 / 3 + 2.0 / 3 + 0.5));
  CHECK(r.crowding[2] == doctest::Approx(2.0 / 3 + 2.0 / 3 + 0.75));
}

TEST_CASE("random matrices agree with the brute-force oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 60, m = 1 + rng() % 20;
    std::vector<std::vector<double>> pts(n, std::vector<double>(m));
    for (auto& p : pts)
      for (auto& v : p) v = static_cast<double>(rng() % 6);  // coarse values force ties
    const auto r = nondominated_sort(pts, Sense::kMinimize);
    CHECK(r.front_of == oracle::front_indices(pts));

    auto neg = pts;
    for (auto& p : neg)
      for (auto& v : p) v = -v;
    CHECK(nondominated_sort(neg, Sense::kMaximize).front_of == r.front_of);
  }
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(nondominated_sort({{1, 2}, {1}}, Sense::kMinimize), Error);
  CHECK_THROWS_AS(nondominated_sort({{}}, Sense::kMinimize), Error);
  CHECK(nondominated_sort({}, Sense::kMinimize).fronts.empty());
}
