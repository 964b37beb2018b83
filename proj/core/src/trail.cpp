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

#include "trailfrac/trail.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

namespace trailfrac {

namespace {

struct BalanceSummary {
  std::size_t plus_one = 0;
  std::size_t minus_one = 0;
  std::size_t large = 0;  // |imbalance| >= 2
  std::optional<VertexId> start;

  bool ok() const noexcept { return large == 0 && plus_one <= 1 && minus_one <= 1; }
};

BalanceSummary summarize(const std::vector<std::int64_t>& imbalance) {
  BalanceSummary s;
  for (std::size_t v = 0; v < imbalance.size(); ++v) {
    const auto x = imbalance[v];
    if (x == 1) {
      ++s.plus_one;
      s.start = static_cast<VertexId>(v);
    } else if (x == -1) {
      ++s.minus_one;
    } else if (x != 0) {
      ++s.large;
    }
  }
  return s;
}

// Iterative Hierholzer over the subset's edges. Each vertex consumes its
// out-edges in increasing index order.
std::vector<EdgeId> hierholzer(const Multigraph& graph, const std::vector<EdgeId>& members,
                               VertexId start) {
  std::vector<std::vector<EdgeId>> out(graph.vertex_count());
  for (EdgeId e : members) out[graph.edge(e).source].push_back(e);
  std::vector<std::size_t> next(graph.vertex_count(), 0);

  std::vector<std::pair<VertexId, std::optional<EdgeId>>> stack;
  stack.reserve(members.size() + 1);
  stack.emplace_back(start, std::nullopt);
  std::vector<EdgeId> reversed;
  reversed.reserve(members.size());

  while (!stack.empty()) {
    const VertexId v = stack.back().first;
    if (next[v] < out[v].size()) {
      const EdgeId e = out[v][next[v]++];
      stack.emplace_back(graph.edge(e).target, e);
    } else {
      if (stack.back().second) reversed.push_back(*stack.back().second);
      stack.pop_back();
    }
  }
  return {reversed.rbegin(), reversed.rend()};
}

bool weakly_connected(const Multigraph& graph, const std::vector<EdgeId>& members) {
  std::vector<VertexId> parent(graph.vertex_count());
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  std::size_t components = 0;
  std::vector<char> touched(graph.vertex_count(), 0);
  for (EdgeId e : members) {
    const Edge& edge = graph.edge(e);
    for (VertexId v : {edge.source, edge.target}) {
      if (!touched[v]) {
        touched[v] = 1;
        ++components;
      }
    }
    const VertexId a = find(edge.source);
    const VertexId b = find(edge.target);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components <= 1;
}

}  // namespace

std::string_view to_string(TrailFailure reason) noexcept {
  switch (reason) {
    case TrailFailure::empty_subset:
      return "empty_subset";
    case TrailFailure::degree_imbalance:
      return "degree_imbalance";
    case TrailFailure::disconnected:
      return "disconnected";
  }
  return "unknown";
}

TrailVerdict is_trail(const Multigraph& graph, const EdgeSubset& subset) {
  require_subset_for(graph, subset);
  TrailVerdict verdict;
  const auto members = subset.indices();
  if (members.empty()) {
    verdict.failure_reason = TrailFailure::empty_subset;
    return verdict;
  }
  // Disconnection outranks imbalance when both apply.
  if (!weakly_connected(graph, members)) {
    verdict.failure_reason = TrailFailure::disconnected;
    return verdict;
  }
  const auto balance = summarize(imbalance_profile(graph, subset));
  if (!balance.ok()) {
    verdict.failure_reason = TrailFailure::degree_imbalance;
    return verdict;
  }
  const VertexId start = balance.start.value_or(graph.edge(members.front()).source);
  verdict.is_trail = true;
  verdict.witness = hierholzer(graph, members, start);
  return verdict;
}

std::optional<std::vector<EdgeId>> witness_trail(const Multigraph& graph, const EdgeSubset& subset) {
  return is_trail(graph, subset).witness;
}

bool necessary_balance_condition(const Multigraph& graph, const EdgeSubset& subset) {
  return summarize(imbalance_profile(graph, subset)).ok();
}

bool chains_as_trail(const Multigraph& graph, const EdgeSubset& subset,
                     const std::vector<EdgeId>& order) {
  require_subset_for(graph, subset);
  if (order.size() != subset.size()) return false;
  EdgeSubset seen(subset.width());
  for (EdgeId e : order) {
    if (!subset.contains(e) || seen.contains(e)) return false;
    seen.insert(e);
  }
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (graph.edge(order[i - 1]).target != graph.edge(order[i]).source) return false;
  }
  return true;
}

bool oracle_is_trail(const Multigraph& graph, const EdgeSubset& subset) {
  require_subset_for(graph, subset);
  auto order = subset.indices();
  if (order.size() > kOracleMaxEdges) {
    throw std::length_error("subset too large for permutation oracle (" +
                            std::to_string(order.size()) + " > " +
                            std::to_string(kOracleMaxEdges) + " edges)");
  }
  if (order.empty()) return false;
  do {
    bool chained = true;
    for (std::size_t i = 1; i < order.size() && chained; ++i) {
      chained = graph.edge(order[i - 1]).target == graph.edge(order[i]).source;
    }
    if (chained) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

TrailTester::TrailTester(const Multigraph& graph)
    : graph_(&graph), imbalance_(graph.vertex_count(), 0), parent_(graph.vertex_count()) {
  std::iota(parent_.begin(), parent_.end(), VertexId{0});
  members_.reserve(graph.edge_count());
}

VertexId TrailTester::find(VertexId v) {
  while (parent_[v] != v) {
    parent_[v] = parent_[parent_[v]];
    v = parent_[v];
  }
  return v;
}

void TrailTester::collect(std::span<const std::uint64_t> words) {
  members_.clear();
  const std::size_t m = graph_->edge_count();
  for (std::size_t w = 0; w < words.size() && w * 64 < m; ++w) {
    std::uint64_t bits = words[w];
    while (bits != 0) {
      const auto e = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      if (e >= m) break;
      members_.push_back(static_cast<EdgeId>(e));
      bits &= bits - 1;
    }
  }
}

bool TrailTester::members_connected() {
  const auto& edges = graph_->edges();
  std::size_t components = 0;
  // parent_ is all-identity between calls; only touched entries are reset.
  for (EdgeId e : members_) {
    const VertexId s = edges[e].source;
    const VertexId t = edges[e].target;
    const VertexId a = find(s);
    const VertexId b = find(t);
    if (a != b) parent_[a] = b;
  }
  for (EdgeId e : members_) {
    for (VertexId v : {edges[e].source, edges[e].target}) {
      if (imbalance_[v] == 0) {
        imbalance_[v] = 1;  // reused as a visited mark
        if (find(v) == v) ++components;
      }
    }
  }
  for (EdgeId e : members_) {
    parent_[edges[e].source] = edges[e].source;
    parent_[edges[e].target] = edges[e].target;
    imbalance_[edges[e].source] = 0;
    imbalance_[edges[e].target] = 0;
  }
  return components <= 1;
}

bool TrailTester::connected(std::span<const std::uint64_t> words) {
  collect(words);
  return members_connected();
}

bool TrailTester::is_trail(std::span<const std::uint64_t> words) {
  collect(words);
  if (members_.empty()) return false;
  const auto& edges = graph_->edges();
  for (EdgeId e : members_) {
    ++imbalance_[edges[e].source];
    --imbalance_[edges[e].target];
  }
  std::size_t plus = 0;
  std::size_t minus = 0;
  bool balanced = true;
  for (EdgeId e : members_) {
    for (VertexId v : {edges[e].source, edges[e].target}) {
      const auto x = imbalance_[v];
      if (x == 1) {
        ++plus;
      } else if (x == -1) {
        ++minus;
      } else if (x != 0 && x != std::numeric_limits<std::int64_t>::min()) {
        balanced = false;
      }
      // Mark so each vertex is classified once.
      imbalance_[v] = std::numeric_limits<std::int64_t>::min();
    }
  }
  for (EdgeId e : members_) {
    imbalance_[edges[e].source] = 0;
    imbalance_[edges[e].target] = 0;
  }
  if (!balanced || plus > 1 || minus > 1) return false;
  return members_connected();
}

}  // namespace trailfrac
