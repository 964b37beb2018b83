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

#include "trailfrac/exact.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace trailfrac {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt factorial(std::uint64_t n) {
  BigInt result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

std::vector<BigInt> pascal_row(std::uint64_t n) {
  std::vector<BigInt> row(n + 1);
  row[0] = 1;
  for (std::uint64_t k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
  return row;
}

BigInt pow2(std::uint64_t exponent) {
  BigInt result = 1;
  result <<= static_cast<unsigned>(exponent);
  return result;
}

namespace {

// Top 64 bits of x as a double mantissa and the shift that was dropped.
std::pair<double, std::int64_t> split_top(const BigInt& x) {
  const auto msb = static_cast<std::int64_t>(boost::multiprecision::msb(x));
  const std::int64_t shift = msb > 63 ? msb - 63 : 0;
  const BigInt top = x >> static_cast<unsigned>(shift);
  return {static_cast<double>(top.convert_to<std::uint64_t>()), shift};
}

}  // namespace

double log_of(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log_of: argument must be positive");
  const auto [mantissa, shift] = split_top(x);
  return std::log(mantissa) + static_cast<double>(shift) * std::numbers::ln2;
}

double scaled_to_double(const BigInt& x, std::int64_t exponent) {
  if (x == 0) return 0.0;
  if (x < 0) return -scaled_to_double(-x, exponent);
  const auto [mantissa, shift] = split_top(x);
  return std::ldexp(mantissa, static_cast<int>(shift + exponent));
}

std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace trailfrac
