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

#pragma once

#include <cstdint>

#include "trailfrac/graph.hpp"

namespace trailfrac {

/// Two vertices with m/2 parallel edges each way: edges 0..m/2-1 are 0->1,
/// the rest 1->0. Throws std::invalid_argument for odd or nonpositive m.
Multigraph gen_family(std::size_t m);

/// Sources uniform on [0, n), targets uniform on the other n-1 vertices.
/// Deterministic per seed. Throws std::invalid_argument for n < 2.
Multigraph gen_random_multigraph(std::size_t n, std::size_t m, std::uint64_t seed);

/// k edges i -> i+1 on k+1 vertices; k >= 1.
Multigraph gen_path(std::size_t k);
/// k edges i -> (i+1) mod k; k >= 2.
Multigraph gen_cycle(std::size_t k);
/// k edges 0 -> i on k+1 vertices; k >= 1.
Multigraph gen_star(std::size_t k);

}  // namespace trailfrac
