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
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace trailfrac {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

BigInt factorial(std::uint64_t n);

/// Row n of Pascal's triangle, C(n, 0..n).
std::vector<BigInt> pascal_row(std::uint64_t n);

BigInt pow2(std::uint64_t exponent);

/// Natural log of a positive integer, accurate to double precision at any size.
double log_of(const BigInt& x);

/// x * 2^exponent as a double, without materialising either factor as a double.
double scaled_to_double(const BigInt& x, std::int64_t exponent);

std::string to_string(const BigInt& x);

}  // namespace trailfrac
