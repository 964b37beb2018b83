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
#include <optional>
#include <vector>

#include "trailfrac/counting.hpp"
#include "trailfrac/exact.hpp"

namespace trailfrac {

/// sqrt(log2(m) / m). Throws std::invalid_argument for m < 2.
double theorem_upper_bound(std::uint64_t m);

struct BoundReport {
  std::uint64_t m = 0;
  double theorem_value = 0.0;
  double degree_threshold = 0.0;  // k = m / log2 m
  double sequence_length = 0.0;   // r = log2 m
  std::optional<FamilyCount> family;
  std::optional<double> family_f;
  std::optional<double> ratio;    // f(G(m)) * sqrt(m)
};

/// Family fields are filled for even m only.
BoundReport bound_report(std::uint64_t m);

struct StirlingBounds {
  double log_lower = 0.0;
  double log_upper = 0.0;
  double lower = 0.0;  // +inf once exp overflows
  double upper = 0.0;
};

/// sqrt(2 pi) n^(n+1/2) e^-n <= n! <= e n^(n+1/2) e^-n, evaluated in log space.
/// Throws std::invalid_argument for n < 1.
StirlingBounds stirling_bounds(std::uint64_t n);

/// Sandwich check against an exact factorial compared in log space.
bool stirling_sandwich_holds(std::uint64_t n, const BigInt& n_factorial);

/// 2^-c C(c, c/2) <= e / (pi sqrt c). Throws std::invalid_argument for odd or zero c.
bool central_binomial_bound_check(std::uint64_t c);

/// C(c, j-1) + C(c, j) + C(c, j+1), with C(c, t) = 0 outside 0..c.
BigInt balance_window_count(std::uint64_t c, std::int64_t j);

/// P(X in {j-1, j, j+1}) for X ~ Binomial(c, 1/2). Throws for c < 1.
double balance_window_probability(std::uint64_t c, std::int64_t j);

/// Exact check of balance_window_probability(c, j) <= 3 2^-c C(c, floor(c/2)).
bool balance_window_bound_check(std::uint64_t c, std::int64_t j);

/// Three quantities from the many-vertices case, all as multiples of 2^-r:
/// the three-term sum C(r,2) 2^-(r-2) + r 2^-(r-1) + 2^-r, the polynomial
/// relaxation (2r^2 + 2r + 1) 2^-r, and the closing bound 4 r^2 2^-r.
struct TailBoundCheck {
  std::uint64_t r = 0;
  BigInt tail_sum_scaled;
  BigInt polynomial_scaled;
  BigInt quadratic_bound_scaled;
  double tail_sum = 0.0;
  double polynomial_bound = 0.0;
  double quadratic_bound = 0.0;
  bool holds = false;  // tail_sum <= polynomial_bound <= quadratic_bound
};

/// Throws std::invalid_argument for r < 2.
TailBoundCheck case2_tail_bound_check(std::uint64_t r);

/// sum_{l=0}^{m/2} C(m/2, l)^2 == C(m, m/2). Throws for odd or zero m.
bool vandermonde_identity_check(std::uint64_t m);

struct FamilyRatioRow {
  std::uint64_t m = 0;
  BigInt d;
  double f = 0.0;
  double f_sqrt_m = 0.0;
  double theorem_bound = 0.0;
};

/// One row per even m in [m_min, m_max], from closed-form counts. Both ends
/// must be even and >= 4 with m_min <= m_max; otherwise std::invalid_argument.
std::vector<FamilyRatioRow> family_ratio_scan(std::uint64_t m_min, std::uint64_t m_max);

/// Header "m,d,f,f_sqrt_m,theorem_bound"; reals carry 12 significant digits.
void write_csv(std::ostream& out, const std::vector<FamilyRatioRow>& rows);

}  // namespace trailfrac
