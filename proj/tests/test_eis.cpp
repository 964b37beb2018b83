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

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "trailfrac/eis.hpp"
#include "trailfrac/generators.hpp"

using namespace trailfrac;

TEST_CASE("greedy_eis traces") {
  const auto star = greedy_eis(gen_star(4));
  // Leaves first; at the last step the center (vertex 0) ties with leaf 4 and
  // wins on index, taking the leaf with it.
  CHECK(star.vertices == std::vector<VertexId>{1, 2, 3, 0});
  CHECK(star.length() == 4);
  CHECK(star.fresh_edges == std::vector<EdgeId>{0, 1, 2, 3});
  CHECK(star.removed_per_step == std::vector<std::size_t>{1, 1, 1, 2});

  const auto fam = greedy_eis(gen_family(4));
  CHECK(fam.vertices == std::vector<VertexId>{0});
  CHECK(fam.removed_per_step == std::vector<std::size_t>{2});

  const auto single = greedy_eis(Multigraph(2, {{0, 1}}));
  CHECK(single.vertices == std::vector<VertexId>{0});
  CHECK(single.fresh_edges == std::vector<EdgeId>{0});

  CHECK(greedy_eis(Multigraph(5, {})).length() == 0);
}

TEST_CASE("isolated input vertices are skipped") {
  const Multigraph g(5, {{1, 3}});
  const auto seq = greedy_eis(g);
  CHECK(seq.vertices == std::vector<VertexId>{1});
  CHECK(non_isolated_vertex_count(g) == 2);
}

TEST_CASE("verify_eis examples") {
  const auto star = gen_star(4);
  const std::vector<VertexId> leaf_then_center{1, 0};
  CHECK(verify_eis(star, leaf_then_center));

  const auto fam = gen_family(4);
  const std::vector<VertexId> both{0, 1};
  CHECK_FALSE(verify_eis(fam, both));

  const std::vector<VertexId> dup{1, 1};
  CHECK_FALSE(verify_eis(star, dup));

  const std::vector<VertexId> bad{7};
  CHECK_THROWS_AS(verify_eis(star, bad), std::out_of_range);

  CHECK(verify_eis(star, greedy_eis(star)));
}

TEST_CASE("verify_eis checks certificates") {
  const auto star = gen_star(4);
  EisSequence seq{{1, 0}, {0, 1}, {}};
  CHECK(verify_eis(star, seq));
  seq.fresh_edges = {0, 0};  // edge 0 is already covered by vertex 1
  CHECK_FALSE(verify_eis(star, seq));
  seq.fresh_edges = {0};
  CHECK_FALSE(verify_eis(star, seq));
}

TEST_CASE("lemma bound, soundness and per-step elimination on random graphs") {
  std::mt19937_64 rng(2024);
  auto corpus = testing::small_corpus();
  for (std::uint64_t i = 0; i < 150; ++i) {
    corpus.push_back(gen_random_multigraph(2 + rng() % 49, rng() % 201, i));
  }
  for (const auto& g : corpus) {
    const auto seq = greedy_eis(g);
    CHECK(verify_eis(g, seq));
    CHECK(2 * seq.length() >= non_isolated_vertex_count(g));
    std::size_t removed = 0;
    for (auto k : seq.removed_per_step) {
      CHECK(k >= 1);
      CHECK(k <= 2);
      removed += k;
    }
    CHECK(removed == non_isolated_vertex_count(g));
  }
}

TEST_CASE("independent sets of non-isolated vertices pass verify_eis") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = gen_random_multigraph(3 + trial % 20, 1 + trial % 30, trial);
    std::vector<char> touched(g.vertex_count(), 0);
    for (const auto& e : g.edges()) touched[e.source] = touched[e.target] = 1;

    // Greedy random independent set.
    std::vector<VertexId> order(g.vertex_count());
    std::iota(order.begin(), order.end(), VertexId{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<char> blocked(g.vertex_count(), 0);
    std::vector<VertexId> chosen;
    for (VertexId v : order) {
      if (!touched[v] || blocked[v]) continue;
      chosen.push_back(v);
      for (const auto& e : g.edges()) {
        if (e.source == v) blocked[e.target] = 1;
        if (e.target == v) blocked[e.source] = 1;
      }
    }
    CHECK(verify_eis(g, chosen));
  }
}
