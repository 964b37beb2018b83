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

#include "trailfrac/bounds.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

namespace trailfrac {

double theorem_upper_bound(std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("theorem bound needs m >= 2, got " + std::to_string(m));
  const double md = static_cast<double>(m);
  return std::sqrt(std::log2(md) / md);
}

BoundReport bound_report(std::uint64_t m) {
  BoundReport r;
  r.m = m;
  r.theorem_value = theorem_upper_bound(m);
  const double md = static_cast<double>(m);
  r.sequence_length = std::log2(md);
  r.degree_threshold = md / r.sequence_length;
  if (m % 2 == 0) {
    r.family = count_family_closed_form(static_cast<std::size_t>(m));
    r.family_f = scaled_to_double(r.family->total, -static_cast<std::int64_t>(m));
    r.ratio = *r.family_f * std::sqrt(md);
  }
  return r;
}

StirlingBounds stirling_bounds(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("Stirling bounds need n >= 1");
  const double nd = static_cast<double>(n);
  const double core = (nd + 0.5) * std::log(nd) - nd;
  StirlingBounds b;
  b.log_lower = 0.5 * std::log(2.0 * std::numbers::pi) + core;
  b.log_upper = 1.0 + core;
  b.lower = std::exp(b.log_lower);
  b.upper = std::exp(b.log_upper);
  return b;
}

bool stirling_sandwich_holds(std::uint64_t n, const BigInt& n_factorial) {
  const auto b = stirling_bounds(n);
  const double log_fact = log_of(n_factorial);
  return b.log_lower <= log_fact && log_fact <= b.log_upper;
}

bool central_binomial_bound_check(std::uint64_t c) {
  if (c == 0 || c % 2 != 0) {
    throw std::invalid_argument("central binomial check needs even c >= 2, got " + std::to_string(c));
  }
  const auto ci = static_cast<std::int64_t>(c);
  const double lhs = scaled_to_double(binomial(ci, ci / 2), -ci);
  const double rhs = std::numbers::e / (std::numbers::pi * std::sqrt(static_cast<double>(c)));
  return lhs <= rhs;
}

BigInt balance_window_count(std::uint64_t c, std::int64_t j) {
  const auto ci = static_cast<std::int64_t>(c);
  return binomial(ci, j - 1) + binomial(ci, j) + binomial(ci, j + 1);
}

double balance_window_probability(std::uint64_t c, std::int64_t j) {
  if (c < 1) throw std::invalid_argument("balance window needs c >= 1");
  return scaled_to_double(balance_window_count(c, j), -static_cast<std::int64_t>(c));
}

bool balance_window_bound_check(std::uint64_t c, std::int64_t j) {
  if (c < 1) throw std::invalid_argument("balance window needs c >= 1");
  const auto ci = static_cast<std::int64_t>(c);
  return balance_window_count(c, j) <= 3 * binomial(ci, ci / 2);
}

TailBoundCheck case2_tail_bound_check(std::uint64_t r) {
  if (r < 2) throw std::invalid_argument("tail bound needs r >= 2, got " + std::to_string(r));
  TailBoundCheck t;
  t.r = r;
  const BigInt rb = r;
  // C(r,2) 2^-(r-2) = 4 C(r,2) 2^-r and r 2^-(r-1) = 2r 2^-r.
  t.tail_sum_scaled = 4 * binomial(static_cast<std::int64_t>(r), 2) + 2 * rb + 1;
  t.polynomial_scaled = 2 * rb * rb + 2 * rb + 1;
  t.quadratic_bound_scaled = 4 * rb * rb;
  const auto e = -static_cast<std::int64_t>(r);
  t.tail_sum = scaled_to_double(t.tail_sum_scaled, e);
  t.polynomial_bound = scaled_to_double(t.polynomial_scaled, e);
  t.quadratic_bound = scaled_to_double(t.quadratic_bound_scaled, e);
  t.holds = t.tail_sum_scaled <= t.polynomial_scaled && t.polynomial_scaled <= t.quadratic_bound_scaled;
  return t;
}

bool vandermonde_identity_check(std::uint64_t m) {
  if (m == 0 || m % 2 != 0) {
    throw std::invalid_argument("Vandermonde check needs even m >= 2, got " + std::to_string(m));
  }
  const auto half = pascal_row(m / 2);
  BigInt sum = 0;
  for (const auto& b : half) sum += b * b;
  const auto mi = static_cast<std::int64_t>(m);
  return sum == binomial(mi, mi / 2);
}

std::vector<FamilyRatioRow> family_ratio_scan(std::uint64_t m_min, std::uint64_t m_max) {
  if (m_min % 2 != 0 || m_max % 2 != 0 || m_min < 4 || m_min > m_max) {
    throw std::invalid_argument("scan range must be even, >= 4 and ordered; got [" +
                                std::to_string(m_min) + ", " + std::to_string(m_max) + "]");
  }
  std::vector<FamilyRatioRow> rows;
  rows.reserve(static_cast<std::size_t>((m_max - m_min) / 2 + 1));
  for (std::uint64_t m = m_min; m <= m_max; m += 2) {
    const auto fc = count_family_closed_form(static_cast<std::size_t>(m));
    FamilyRatioRow row;
    row.m = m;
    row.d = fc.total;
    row.f = scaled_to_double(fc.total, -static_cast<std::int64_t>(m));
    row.f_sqrt_m = row.f * std::sqrt(static_cast<double>(m));
    row.theorem_bound = theorem_upper_bound(m);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<FamilyRatioRow>& rows) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << "m,d,f,f_sqrt_m,theorem_bound\n";
  out << std::showpoint << std::setprecision(12);
  for (const auto& row : rows) {
    out << row.m << ',' << to_string(row.d) << ',' << row.f << ',' << row.f_sqrt_m << ','
        << row.theorem_bound << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace trailfrac
