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

#include <span>
#include <vector>

#include "trailfrac/graph.hpp"

namespace trailfrac {

/// Edge-increasing sequence v1..vr: each vertex has an incident edge that no
/// earlier vertex touches. fresh_edges[i] certifies vertices[i];
/// removed_per_step[i] is how many vertices the greedy step dropped.
struct EisSequence {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> fresh_edges;
  std::vector<std::size_t> removed_per_step;

  std::size_t length() const noexcept { return vertices.size(); }
};

/// Repeatedly takes the live vertex with the fewest remaining incident edges
/// (lowest index on ties), deletes it and its edges, and drops any vertex left
/// without edges. Vertices isolated in the input never enter the working set.
EisSequence greedy_eis(const Multigraph& graph);

/// Checks I(v_{i+1}) is not contained in I({v_1..v_i}) for every i. Duplicate
/// vertices make the sequence invalid. When fresh_edges is non-empty it must
/// match vertices in length, and each certificate is checked too.
/// Throws std::out_of_range for a vertex >= n.
bool verify_eis(const Multigraph& graph, const EisSequence& sequence);
bool verify_eis(const Multigraph& graph, std::span<const VertexId> vertices);

/// Vertices with at least one incident edge.
std::size_t non_isolated_vertex_count(const Multigraph& graph);

}  // namespace trailfrac
