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
#include <optional>
#include <string_view>
#include <vector>

#include "trailfrac/graph.hpp"

namespace trailfrac {

enum class TrailFailure { empty_subset, degree_imbalance, disconnected };

std::string_view to_string(TrailFailure reason) noexcept;

struct TrailVerdict {
  bool is_trail = false;
  std::optional<std::vector<EdgeId>> witness;
  std::optional<TrailFailure> failure_reason;
};

/// Decides whether `subset` can be ordered e1..ek with t(ei) = s(ei+1).
/// The empty subset is not a trail. On success the witness is the
/// lowest-index-first Hierholzer ordering.
TrailVerdict is_trail(const Multigraph& graph, const EdgeSubset& subset);

/// Witness ordering when `subset` is a trail, otherwise nullopt.
std::optional<std::vector<EdgeId>> witness_trail(const Multigraph& graph, const EdgeSubset& subset);

/// At most one vertex at imbalance +1, at most one at -1, none with |imbalance| >= 2.
bool necessary_balance_condition(const Multigraph& graph, const EdgeSubset& subset);

/// Largest subset the permutation oracle will accept.
inline constexpr std::size_t kOracleMaxEdges = 8;

/// Literal definition: tries every ordering of the subset. Throws
/// std::length_error when |T| > kOracleMaxEdges. Returns false for T = {}.
bool oracle_is_trail(const Multigraph& graph, const EdgeSubset& subset);

/// True iff `order` is a permutation of `subset` whose consecutive edges chain.
bool chains_as_trail(const Multigraph& graph, const EdgeSubset& subset,
                     const std::vector<EdgeId>& order);

/// Reusable decision procedure with per-instance scratch space; one
/// instance per thread. Subsets are little-endian bit vectors of width m.
class TrailTester {
 public:
  explicit TrailTester(const Multigraph& graph);

  bool is_trail(std::span<const std::uint64_t> words);
  bool is_trail(std::uint64_t mask) { return is_trail(std::span<const std::uint64_t>(&mask, 1)); }

  /// Weak connectivity of the edges in the subset only; the degree condition
  /// is the caller's responsibility. An empty subset counts as connected.
  bool connected(std::span<const std::uint64_t> words);
  bool connected(std::uint64_t mask) { return connected(std::span<const std::uint64_t>(&mask, 1)); }

 private:
  VertexId find(VertexId v);
  void collect(std::span<const std::uint64_t> words);
  bool members_connected();

  const Multigraph* graph_;
  std::vector<std::int64_t> imbalance_;
  std::vector<VertexId> parent_;
  std::vector<EdgeId> members_;
};

}  // namespace trailfrac
