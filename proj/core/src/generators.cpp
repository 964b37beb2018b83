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

#include "trailfrac/generators.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace trailfrac {

namespace {

void require_at_least(std::size_t value, std::size_t minimum, const char* what) {
  if (value < minimum) {
    throw std::invalid_argument(std::string(what) + " needs size >= " + std::to_string(minimum) +
                                ", got " + std::to_string(value));
  }
}

}  // namespace

Multigraph gen_family(std::size_t m) {
  if (m == 0 || m % 2 != 0) {
    throw std::invalid_argument("family size m must be even and positive, got " + std::to_string(m));
  }
  std::vector<Edge> edges(m);
  for (std::size_t i = 0; i < m; ++i) edges[i] = i < m / 2 ? Edge{0, 1} : Edge{1, 0};
  return Multigraph(2, std::move(edges));
}

Multigraph gen_random_multigraph(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random multigraph needs n >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick_source(0, n - 1);
  std::uniform_int_distribution<std::uint64_t> pick_other(0, n - 2);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto s = pick_source(rng);
    auto t = pick_other(rng);
    if (t >= s) ++t;
    edges.push_back({static_cast<VertexId>(s), static_cast<VertexId>(t)});
  }
  return Multigraph(n, std::move(edges));
}

Multigraph gen_path(std::size_t k) {
  require_at_least(k, 1, "path");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1)});
  return Multigraph(k + 1, std::move(edges));
}

Multigraph gen_cycle(std::size_t k) {
  require_at_least(k, 2, "cycle");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % k)});
  }
  return Multigraph(k, std::move(edges));
}

Multigraph gen_star(std::size_t k) {
  require_at_least(k, 1, "star");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= k; ++i) edges.push_back({0, static_cast<VertexId>(i)});
  return Multigraph(k + 1, std::move(edges));
}

}  // namespace trailfrac
