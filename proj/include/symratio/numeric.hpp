// Copyright 2026 The symratio Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMRATIO_NUMERIC_HPP_
#define SYMRATIO_NUMERIC_HPP_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "symratio/errors.hpp"

namespace symratio {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt Factorial(std::uint64_t n) {
  BigInt r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

// x * (x - 1) * ... * (x - count + 1); the empty product is 1.
inline BigInt FallingFactorial(std::uint64_t x, std::uint64_t count) {
  if (count > x) return 0;
  BigInt r = 1;
  for (std::uint64_t i = 0; i < count; ++i) r *= (x - i);
  return r;
}

// Multiplicative formula; every intermediate division is exact.
inline BigInt Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

constexpr std::uint64_t PairCount(std::uint64_t n) { return n * (n - 1) / 2; }

// Exact quotient; throws when `num` is not a multiple of `den`.
inline BigInt ExactDivide(const BigInt& num, const BigInt& den,
                          const char* what) {
  if (den == 0) throw Error(Errc::kNotDivisible, std::string(what) + " (zero divisor)");
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw Error(Errc::kNotDivisible,
                std::string(what) + ": " + num.str() + " / " + den.str());
  }
  return q;
}

inline std::string ToString(const BigInt& v) { return v.str(); }

inline std::string ToString(const BigRational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace symratio

#endif  // SYMRATIO_NUMERIC_HPP_
