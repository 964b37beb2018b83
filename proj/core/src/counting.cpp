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

#include "trailfrac/counting.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <boost/math/distributions/normal.hpp>

#include "json.hpp"
#include "trailfrac/trail.hpp"

namespace trailfrac {

namespace {

// Incremental degree-condition state for one enumeration lane. Each vertex
// is in one of four classes: balanced, +1, -1, or |imbalance| >= 2.
class ImbalanceCounters {
 public:
  explicit ImbalanceCounters(const Multigraph& graph) : imbalance_(graph.vertex_count(), 0) {
    sources_.reserve(graph.edge_count());
    targets_.reserve(graph.edge_count());
    for (const Edge& e : graph.edges()) {
      sources_.push_back(e.source);
      targets_.push_back(e.target);
    }
  }

  void reset(std::uint64_t mask) {
    std::fill(imbalance_.begin(), imbalance_.end(), 0);
    plus_ = minus_ = large_ = 0;
    while (mask != 0) {
      toggle(static_cast<std::size_t>(std::countr_zero(mask)), true);
      mask &= mask - 1;
    }
  }

  void toggle(std::size_t edge, bool insert) {
    const std::int32_t delta = insert ? 1 : -1;
    shift(sources_[edge], delta);
    shift(targets_[edge], -delta);
  }

  bool degree_condition() const noexcept { return large_ == 0 && plus_ <= 1 && minus_ <= 1; }

 private:
  void classify(std::int32_t x, int sign) noexcept {
    if (x == 0) return;
    if (x == 1) {
      plus_ += sign;
    } else if (x == -1) {
      minus_ += sign;
    } else {
      large_ += sign;
    }
  }

  void shift(VertexId v, std::int32_t delta) noexcept {
    std::int32_t& x = imbalance_[v];
    classify(x, -1);
    x += delta;
    classify(x, +1);
  }

  std::vector<VertexId> sources_;
  std::vector<VertexId> targets_;
  std::vector<std::int32_t> imbalance_;
  std::int64_t plus_ = 0;
  std::int64_t minus_ = 0;
  std::int64_t large_ = 0;
};

std::uint64_t count_sub_cube(std::uint64_t prefix, std::size_t low_bits, ImbalanceCounters& counters,
                             TrailTester& tester) {
  std::uint64_t mask = prefix;
  counters.reset(mask);
  std::uint64_t hits = 0;
  auto visit = [&] {
    if (mask != 0 && counters.degree_condition() && tester.connected(mask)) ++hits;
  };
  visit();
  const std::uint64_t steps = std::uint64_t{1} << low_bits;
  for (std::uint64_t i = 1; i < steps; ++i) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(i));
    mask ^= std::uint64_t{1} << bit;
    counters.toggle(bit, (mask >> bit) & 1U);
    visit();
  }
  return hits;
}

template <typename Work>
void run_lanes(std::size_t lanes, Work&& work) {
  if (lanes == 1) {
    work(0);
    return;
  }
  std::vector<std::jthread> threads;
  threads.reserve(lanes);
  for (std::size_t lane = 0; lane < lanes; ++lane) threads.emplace_back([&work, lane] { work(lane); });
}

std::uint64_t splitmix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::string CountReport::f_exact() const {
  return std::to_string(d) + "/" + to_string(pow2(m));
}

double CountReport::f() const { return std::ldexp(static_cast<double>(d), -static_cast<int>(m)); }

CountReport count_trails_exact(const Multigraph& graph, std::size_t lanes) {
  const std::size_t m = graph.edge_count();
  if (m > kMaxExactEdges) {
    throw std::length_error("m too large for exact enumeration: " + std::to_string(m) + " > " +
                            std::to_string(kMaxExactEdges));
  }
  if (lanes == 0) throw std::invalid_argument("lanes must be positive");

  const auto start = std::chrono::steady_clock::now();
  const std::size_t prefix_bits = std::min<std::size_t>(std::bit_width(lanes - 1), m);
  const std::size_t low_bits = m - prefix_bits;
  const std::uint64_t cubes = std::uint64_t{1} << prefix_bits;
  const std::size_t workers = static_cast<std::size_t>(std::min<std::uint64_t>(lanes, cubes));

  std::vector<std::uint64_t> per_lane(workers, 0);
  run_lanes(workers, [&](std::size_t lane) {
    ImbalanceCounters counters(graph);
    TrailTester tester(graph);
    std::uint64_t hits = 0;
    for (std::uint64_t cube = lane; cube < cubes; cube += workers) {
      hits += count_sub_cube(cube << low_bits, low_bits, counters, tester);
    }
    per_lane[lane] = hits;
  });

  CountReport report;
  report.m = m;
  for (auto h : per_lane) report.d += h;
  report.lanes = workers;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

FamilyCount count_family_closed_form(std::size_t m) {
  if (m == 0 || m % 2 != 0) {
    throw std::invalid_argument("family size m must be even and positive, got " + std::to_string(m));
  }
  const auto mi = static_cast<std::int64_t>(m);
  FamilyCount fc;
  fc.m = m;
  fc.even_count = binomial(mi, mi / 2) - 1;
  fc.odd_count = 2 * binomial(mi, mi / 2 - 1);
  fc.total = fc.even_count + fc.odd_count;
  return fc;
}

Interval wilson_interval(std::uint64_t hits, std::uint64_t samples, double confidence) {
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw std::invalid_argument("confidence must lie in (0, 1)");
  }
  const boost::math::normal_distribution<double> normal;
  const double z = boost::math::quantile(normal, 0.5 + confidence / 2.0);
  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(hits) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  return {std::clamp(std::min(center - half, p), 0.0, 1.0),
          std::clamp(std::max(center + half, p), 0.0, 1.0)};
}

void sample_subset_words(std::uint64_t seed, std::uint64_t index, std::size_t m,
                         std::span<std::uint64_t> words) {
  std::uint64_t state = splitmix64(seed ^ splitmix64(index));
  const std::size_t used = (m + 63) / 64;
  for (std::size_t w = 0; w < words.size(); ++w) {
    if (w >= used) {
      words[w] = 0;
      continue;
    }
    state += 0x9e3779b97f4a7c15ULL;
    words[w] = splitmix64(state);
  }
  if (m % 64 != 0 && used > 0) words[used - 1] &= (std::uint64_t{1} << (m % 64)) - 1;
}

EstimateReport estimate_trail_fraction(const Multigraph& graph, std::uint64_t samples,
                                       std::uint64_t seed, double confidence, std::size_t lanes) {
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw std::invalid_argument("confidence must lie in (0, 1)");
  }
  if (lanes == 0) throw std::invalid_argument("lanes must be positive");

  const std::size_t workers =
      static_cast<std::size_t>(std::min<std::uint64_t>(lanes, samples));
  const std::size_t word_count = std::max<std::size_t>(1, (graph.edge_count() + 63) / 64);
  std::vector<std::uint64_t> per_lane(workers, 0);

  run_lanes(workers, [&](std::size_t lane) {
    const std::uint64_t begin = samples / workers * lane + std::min<std::uint64_t>(lane, samples % workers);
    const std::uint64_t end = begin + samples / workers + (lane < samples % workers ? 1 : 0);
    TrailTester tester(graph);
    std::vector<std::uint64_t> words(word_count);
    std::uint64_t hits = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      sample_subset_words(seed, i, graph.edge_count(), words);
      if (tester.is_trail(words)) ++hits;
    }
    per_lane[lane] = hits;
  });

  EstimateReport report;
  for (auto h : per_lane) report.hits += h;
  report.samples = samples;
  report.seed = seed;
  report.confidence = confidence;
  report.estimate = static_cast<double>(report.hits) / static_cast<double>(samples);
  const auto ci = wilson_interval(report.hits, samples, confidence);
  report.ci_low = ci.low;
  report.ci_high = ci.high;
  return report;
}

void write_json(std::ostream& out, const CountReport& report, bool include_timing) {
  nlohmann::ordered_json j;
  j["m"] = report.m;
  j["d"] = report.d;
  j["f"] = report.f_exact();
  j["f_decimal"] = report.f();
  j["lanes"] = report.lanes;
  if (include_timing) j["elapsed_seconds"] = report.elapsed_seconds;
  out << j.dump(2) << '\n';
}

void write_json(std::ostream& out, const EstimateReport& report) {
  nlohmann::ordered_json j;
  j["estimate"] = report.estimate;
  j["ci_low"] = report.ci_low;
  j["ci_high"] = report.ci_high;
  j["confidence"] = report.confidence;
  j["samples"] = report.samples;
  j["seed"] = report.seed;
  out << j.dump(2) << '\n';
}

}  // namespace trailfrac
