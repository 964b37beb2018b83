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

#include "trailfrac/eis.hpp"

#include <limits>
#include <optional>
#include <stdexcept>

namespace trailfrac {

EisSequence greedy_eis(const Multigraph& graph) {
  const std::size_t n = graph.vertex_count();
  const auto& edges = graph.edges();

  std::vector<std::vector<EdgeId>> incident(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].source].push_back(static_cast<EdgeId>(e));
    incident[edges[e].target].push_back(static_cast<EdgeId>(e));
  }
  std::vector<std::size_t> remaining(n, 0);
  std::vector<char> alive(n, 0);
  std::size_t alive_count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    remaining[v] = incident[v].size();
    if (remaining[v] > 0) {
      alive[v] = 1;
      ++alive_count;
    }
  }
  std::vector<char> edge_gone(edges.size(), 0);

  EisSequence seq;
  while (alive_count > 0) {
    // Linear scan keeps the lowest-index tie-break trivially correct.
    VertexId pick = 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t v = 0; v < n; ++v) {
      if (alive[v] && remaining[v] < best) {
        best = remaining[v];
        pick = static_cast<VertexId>(v);
      }
    }

    std::optional<EdgeId> fresh;
    std::size_t removed = 1;
    alive[pick] = 0;
    --alive_count;
    for (EdgeId e : incident[pick]) {
      if (edge_gone[e]) continue;
      if (!fresh || e < *fresh) fresh = e;
      edge_gone[e] = 1;
      --remaining[pick];
      const VertexId other = edges[e].source == pick ? edges[e].target : edges[e].source;
      if (--remaining[other] == 0 && alive[other]) {
        alive[other] = 0;
        --alive_count;
        ++removed;
      }
    }
    seq.vertices.push_back(pick);
    seq.fresh_edges.push_back(*fresh);
    seq.removed_per_step.push_back(removed);
  }
  return seq;
}

namespace {

bool verify_impl(const Multigraph& graph, std::span<const VertexId> vertices,
                 std::span<const EdgeId> certificates) {
  const std::size_t n = graph.vertex_count();
  std::vector<char> in_prefix(n, 0);
  for (VertexId v : vertices) {
    if (v >= n) throw std::out_of_range("vertex index out of range");
  }
  const auto& edges = graph.edges();
  auto covered = [&](const Edge& e) { return in_prefix[e.source] || in_prefix[e.target]; };

  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const VertexId v = vertices[i];
    if (in_prefix[v]) return false;
    if (i > 0) {
      bool has_fresh = false;
      for (const Edge& e : edges) {
        if ((e.source == v || e.target == v) && !covered(e)) {
          has_fresh = true;
          break;
        }
      }
      if (!has_fresh) return false;
    }
    if (!certificates.empty()) {
      const EdgeId c = certificates[i];
      if (c >= edges.size()) return false;
      const Edge& e = edges[c];
      if ((e.source != v && e.target != v) || covered(e)) return false;
    }
    in_prefix[v] = 1;
  }
  return true;
}

}  // namespace

bool verify_eis(const Multigraph& graph, const EisSequence& sequence) {
  if (!sequence.fresh_edges.empty() && sequence.fresh_edges.size() != sequence.vertices.size()) {
    return false;
  }
  return verify_impl(graph, sequence.vertices, sequence.fresh_edges);
}

bool verify_eis(const Multigraph& graph, std::span<const VertexId> vertices) {
  return verify_impl(graph, vertices, {});
}

std::size_t non_isolated_vertex_count(const Multigraph& graph) {
  std::vector<char> touched(graph.vertex_count(), 0);
  for (const Edge& e : graph.edges()) touched[e.source] = touched[e.target] = 1;
  std::size_t count = 0;
  for (char t : touched) count += t ? 1 : 0;
  return count;
}

}  // namespace trailfrac
