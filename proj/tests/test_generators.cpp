// Copyright 2026 The trailfrac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"
#include "trailfrac/counting.hpp"
#include "trailfrac/generators.hpp"
#include "trailfrac/trail.hpp"

using namespace trailfrac;

TEST_CASE("gen_family layout") {
  CHECK(gen_family(2).edges() == std::vector<Edge>{{0, 1}, {1, 0}});
  CHECK(gen_family(4).edges() == std::vector<Edge>{{0, 1}, {0, 1}, {1, 0}, {1, 0}});
  for (std::size_t m = 2; m <= 40; m += 2) {
    const auto g = gen_family(m);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == m);
    std::size_t forward = 0;
    for (const auto& e : g.edges()) forward += e.source == 0 ? 1 : 0;
    CHECK(forward == m / 2);
  }
  CHECK_THROWS_AS(gen_family(3), std::invalid_argument);
  CHECK_THROWS_AS(gen_family(0), std::invalid_argument);
}

TEST_CASE("gen_random_multigraph") {
  const auto a = gen_random_multigraph(2, 5, 77);
  CHECK(a.edge_count() == 5);
  CHECK(a == gen_random_multigraph(2, 5, 77));
  CHECK(gen_random_multigraph(4, 0, 1).edge_count() == 0);
  CHECK_THROWS_AS(gen_random_multigraph(1, 3, 1), std::invalid_argument);

  // Every ordered pair shows up over enough draws, and no self-loops.
  const auto g = gen_random_multigraph(4, 4000, 3);
  std::vector<std::size_t> pairs(16, 0);
  for (const auto& e : g.edges()) {
    CHECK(e.source != e.target);
    ++pairs[e.source * 4 + e.target];
  }
  for (std::size_t s = 0; s < 4; ++s) {
    for (std::size_t t = 0; t < 4; ++t) {
      if (s != t) CHECK(pairs[s * 4 + t] > 250);
    }
  }
}

TEST_CASE("path, cycle and star shapes") {
  CHECK(gen_path(2).edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(gen_path(2).vertex_count() == 3);
  CHECK(gen_cycle(3).edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});
  CHECK(gen_star(3).edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  CHECK_THROWS_AS(gen_path(0), std::invalid_argument);
  CHECK_THROWS_AS(gen_cycle(1), std::invalid_argument);
  CHECK_THROWS_AS(gen_star(0), std::invalid_argument);
}

TEST_CASE("the full cycle is a closed trail") {
  const auto c3 = gen_cycle(3);
  CHECK(is_trail(c3, EdgeSubset::all(3)).is_trail);
  // Every nonempty subset of a directed triangle is a run of the cycle.
  CHECK(count_trails_exact(c3).d == 7);
}

TEST_CASE("paths have k(k+1)/2 trails") {
  for (std::size_t k = 1; k <= 10; ++k) {
    CHECK(count_trails_exact(gen_path(k)).d == k * (k + 1) / 2);
  }
}
