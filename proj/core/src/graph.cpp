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

#include "trailfrac/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace trailfrac {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t width) { return (width + kWordBits - 1) / kWordBits; }

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits a line into exactly two unsigned decimal fields.
bool parse_pair(std::string_view line, std::uint64_t& a, std::uint64_t& b) {
  auto skip_ws = [&](const char* p, const char* end) {
    while (p != end && (*p == ' ' || *p == '\t')) ++p;
    return p;
  };
  const char* p = line.data();
  const char* end = p + line.size();
  p = skip_ws(p, end);
  auto r1 = std::from_chars(p, end, a);
  if (r1.ec != std::errc{} || r1.ptr == p) return false;
  p = skip_ws(r1.ptr, end);
  if (p == r1.ptr) return false;
  auto r2 = std::from_chars(p, end, b);
  if (r2.ec != std::errc{} || r2.ptr == p) return false;
  return skip_ws(r2.ptr, end) == end;
}

}  // namespace

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.source >= vertex_count_ || e.target >= vertex_count_) {
      throw std::invalid_argument("edge " + std::to_string(i) + " has an endpoint out of range");
    }
    if (e.source == e.target) {
      throw std::invalid_argument("edge " + std::to_string(i) + " is a self-loop");
    }
  }
}

EdgeSubset::EdgeSubset(std::size_t width) : width_(width), words_(word_count(width), 0) {}

EdgeSubset EdgeSubset::from_indices(std::size_t width, std::span<const EdgeId> indices) {
  EdgeSubset s(width);
  for (EdgeId e : indices) {
    if (e >= width) {
      throw std::invalid_argument("edge index " + std::to_string(e) + " out of range for " +
                                  std::to_string(width) + " edges");
    }
    if (s.contains(e)) {
      throw std::invalid_argument("duplicate edge index " + std::to_string(e));
    }
    s.insert(e);
  }
  return s;
}

EdgeSubset EdgeSubset::from_mask(std::size_t width, std::uint64_t mask) {
  if (width > kWordBits) throw std::invalid_argument("mask subsets support at most 64 edges");
  EdgeSubset s(width);
  if (width > 0) s.words_[0] = width == kWordBits ? mask : (mask & ((std::uint64_t{1} << width) - 1));
  return s;
}

EdgeSubset EdgeSubset::all(std::size_t width) {
  EdgeSubset s(width);
  for (std::size_t e = 0; e < width; ++e) s.insert(static_cast<EdgeId>(e));
  return s;
}

std::size_t EdgeSubset::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool EdgeSubset::contains(EdgeId e) const noexcept {
  if (e >= width_) return false;
  return (words_[e / kWordBits] >> (e % kWordBits)) & 1U;
}

void EdgeSubset::insert(EdgeId e) {
  if (e >= width_) throw std::out_of_range("edge index out of range");
  words_[e / kWordBits] |= std::uint64_t{1} << (e % kWordBits);
}

void EdgeSubset::erase(EdgeId e) {
  if (e >= width_) throw std::out_of_range("edge index out of range");
  words_[e / kWordBits] &= ~(std::uint64_t{1} << (e % kWordBits));
}

std::vector<EdgeId> EdgeSubset::indices() const {
  std::vector<EdgeId> out;
  out.reserve(size());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<EdgeId>(w * kWordBits + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

EdgeSubset& EdgeSubset::operator|=(const EdgeSubset& other) {
  if (other.width_ != width_) throw std::invalid_argument("subset width mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

bool EdgeSubset::is_subset_of(const EdgeSubset& other) const {
  if (other.width_ != width_) throw std::invalid_argument("subset width mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

Multigraph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::uint64_t a = 0;
    std::uint64_t b = 0;
    if (!have_header) {
      if (!parse_pair(line, a, b)) throw ParseError(line_no, "malformed header, expected \"n m\"");
      n = a;
      m = b;
      have_header = true;
      edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(m, 1U << 20)));
      continue;
    }
    if (!parse_pair(line, a, b)) throw ParseError(line_no, "malformed edge line, expected \"src dst\"");
    if (edges.size() == m) {
      throw ParseError(line_no, "edge-count mismatch: header declares " + std::to_string(m) + " edges");
    }
    if (a >= n || b >= n) {
      throw ParseError(line_no, "vertex index out of range for n=" + std::to_string(n));
    }
    if (a == b) throw ParseError(line_no, "self-loop forbidden");
    edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b)});
  }

  if (!have_header) throw ParseError(line_no, "malformed header: no header line found");
  if (edges.size() != m) {
    throw ParseError(line_no, "edge-count mismatch: header declares " + std::to_string(m) +
                                  " edges, found " + std::to_string(edges.size()));
  }
  return Multigraph(static_cast<std::size_t>(n), std::move(edges));
}

std::string serialize_graph(const Multigraph& graph) {
  std::ostringstream out;
  out << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
  for (const Edge& e : graph.edges()) out << e.source << ' ' << e.target << '\n';
  return out.str();
}

Multigraph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void require_subset_for(const Multigraph& graph, const EdgeSubset& subset) {
  if (subset.width() != graph.edge_count()) {
    throw std::invalid_argument("subset width " + std::to_string(subset.width()) +
                                " does not match edge count " + std::to_string(graph.edge_count()));
  }
}

VertexDegree degree(const Multigraph& graph, VertexId v, const EdgeSubset& subset) {
  require_subset_for(graph, subset);
  if (v >= graph.vertex_count()) throw std::out_of_range("vertex index out of range");
  VertexDegree d;
  for (EdgeId e : subset.indices()) {
    const Edge& edge = graph.edge(e);
    if (edge.target == v) ++d.in;
    if (edge.source == v) ++d.out;
  }
  d.total = d.in + d.out;
  return d;
}

DegreeProfile degree_profile(const Multigraph& graph, const EdgeSubset& subset) {
  require_subset_for(graph, subset);
  DegreeProfile p;
  p.in_degree.assign(graph.vertex_count(), 0);
  p.out_degree.assign(graph.vertex_count(), 0);
  for (EdgeId e : subset.indices()) {
    const Edge& edge = graph.edge(e);
    ++p.out_degree[edge.source];
    ++p.in_degree[edge.target];
  }
  return p;
}

EdgeSubset incident_edges(const Multigraph& graph, std::span<const VertexId> vertices) {
  std::vector<char> in_set(graph.vertex_count(), 0);
  for (VertexId v : vertices) {
    if (v >= graph.vertex_count()) throw std::out_of_range("vertex index out of range");
    in_set[v] = 1;
  }
  EdgeSubset out(graph.edge_count());
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edges()[e];
    if (in_set[edge.source] || in_set[edge.target]) out.insert(static_cast<EdgeId>(e));
  }
  return out;
}

std::vector<std::int64_t> imbalance_profile(const Multigraph& graph, const EdgeSubset& subset) {
  require_subset_for(graph, subset);
  std::vector<std::int64_t> imbalance(graph.vertex_count(), 0);
  for (EdgeId e : subset.indices()) {
    const Edge& edge = graph.edge(e);
    ++imbalance[edge.source];
    --imbalance[edge.target];
  }
  return imbalance;
}

}  // namespace trailfrac
