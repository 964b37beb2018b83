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

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trailfrac {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  VertexId source = 0;
  VertexId target = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Raised by parse_graph; carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Directed multigraph on dense vertex ids [0, n). Edge identity is the
/// position in edges(); parallel edges are distinct, self-loops are rejected.
class Multigraph {
 public:
  Multigraph() = default;
  /// Throws std::invalid_argument on a self-loop or an endpoint >= vertex_count.
  Multigraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

/// Fixed-width set of edge indices, stored as a bit vector of width m.
class EdgeSubset {
 public:
  EdgeSubset() = default;
  explicit EdgeSubset(std::size_t width);

  /// Throws std::invalid_argument on a duplicate or an index >= width.
  static EdgeSubset from_indices(std::size_t width, std::span<const EdgeId> indices);
  /// Low `width` bits of `mask`; width must be <= 64.
  static EdgeSubset from_mask(std::size_t width, std::uint64_t mask);
  static EdgeSubset all(std::size_t width);

  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  bool contains(EdgeId e) const noexcept;
  void insert(EdgeId e);
  void erase(EdgeId e);

  /// Members in increasing order.
  std::vector<EdgeId> indices() const;

  EdgeSubset& operator|=(const EdgeSubset& other);
  friend EdgeSubset operator|(EdgeSubset a, const EdgeSubset& b) { return a |= b; }
  bool is_subset_of(const EdgeSubset& other) const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;

 private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexDegree {
  std::size_t in = 0;
  std::size_t out = 0;
  std::size_t total = 0;

  friend bool operator==(const VertexDegree&, const VertexDegree&) = default;
};

/// Per-vertex (in, out) degrees with respect to an edge subset.
struct DegreeProfile {
  std::vector<std::size_t> in_degree;
  std::vector<std::size_t> out_degree;
};

Multigraph parse_graph(std::string_view text);
std::string serialize_graph(const Multigraph& graph);

/// Reads and parses a graph file; throws std::runtime_error if unreadable.
Multigraph load_graph(const std::string& path);

/// Throws std::invalid_argument when `subset` is not sized for `graph`.
void require_subset_for(const Multigraph& graph, const EdgeSubset& subset);

/// Throws std::out_of_range for v >= n.
VertexDegree degree(const Multigraph& graph, VertexId v, const EdgeSubset& subset);
DegreeProfile degree_profile(const Multigraph& graph, const EdgeSubset& subset);

/// I(U): edges with at least one endpoint in U. Throws std::out_of_range.
EdgeSubset incident_edges(const Multigraph& graph, std::span<const VertexId> vertices);

/// out-degree minus in-degree per vertex; entries sum to zero.
std::vector<std::int64_t> imbalance_profile(const Multigraph& graph, const EdgeSubset& subset);

}  // namespace trailfrac
