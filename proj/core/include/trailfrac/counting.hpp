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
#include <iosfwd>
#include <string>

#include "trailfrac/exact.hpp"
#include "trailfrac/graph.hpp"

namespace trailfrac {

/// Largest edge count accepted by count_trails_exact.
inline constexpr std::size_t kMaxExactEdges = 30;

struct CountReport {
  std::size_t m = 0;
  std::uint64_t d = 0;
  double elapsed_seconds = 0.0;
  std::size_t lanes = 1;

  /// Unreduced "d/2^m", e.g. "13/16".
  std::string f_exact() const;
  double f() const;
};

/// d(G): the number of nonempty trail-representable subsets, by Gray-code
/// enumeration of all 2^m subsets. Lanes split the cube on its top
/// ceil(log2 lanes) edge bits; the result does not depend on lanes.
/// Throws std::length_error when m > kMaxExactEdges, std::invalid_argument
/// when lanes == 0.
CountReport count_trails_exact(const Multigraph& graph, std::size_t lanes = 1);

struct FamilyCount {
  std::size_t m = 0;
  BigInt even_count;
  BigInt odd_count;
  BigInt total;
};

/// Closed-form d(G(m)) for the two-vertex family: even-sized trails number
/// C(m, m/2) - 1, odd-sized ones 2 C(m, m/2 - 1). Throws std::invalid_argument
/// for odd or nonpositive m.
FamilyCount count_family_closed_form(std::size_t m);

struct EstimateReport {
  double estimate = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double confidence = 0.95;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t hits = 0;
};

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

/// Wilson score interval for `hits` successes out of `samples`.
Interval wilson_interval(std::uint64_t hits, std::uint64_t samples, double confidence);

/// The fair bits selecting sample `index`'s subset; a pure function of
/// (seed, index), so results do not depend on how samples are scheduled.
void sample_subset_words(std::uint64_t seed, std::uint64_t index, std::size_t m,
                         std::span<std::uint64_t> words);

/// Monte Carlo estimate of f(G): each sample includes every edge independently
/// with probability 1/2. Throws std::invalid_argument for samples == 0,
/// confidence outside (0, 1), or lanes == 0.
EstimateReport estimate_trail_fraction(const Multigraph& graph, std::uint64_t samples,
                                       std::uint64_t seed, double confidence = 0.95,
                                       std::size_t lanes = 1);

void write_json(std::ostream& out, const CountReport& report, bool include_timing = false);
void write_json(std::ostream& out, const EstimateReport& report);

}  // namespace trailfrac
