// Copyright 2026 The diffspec Authors.
//
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

#pragma once

// Integer helpers for exponent arithmetic modulo 2^m - 1.

#include <cstdint>
#include <optional>
#include <vector>

namespace diffspec::numeric {

// Distinct prime factors, ascending.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t value) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= value; ++p) {
    if (value % p != 0) continue;
    primes.push_back(p);
    while (value % p == 0) value /= p;
  }
  if (value > 1) primes.push_back(value);
  return primes;
}

// Inverse of `value` modulo `modulus`, if gcd(value, modulus) = 1.
inline std::optional<std::uint64_t> inverse_mod(std::uint64_t value,
                                                std::uint64_t modulus) {
  if (modulus == 0) return std::nullopt;
  if (modulus == 1) return 0;
  __int128 r0 = modulus, r1 = value % modulus;
  __int128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    const __int128 quotient = r0 / r1;
    __int128 tmp = r0 - quotient * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - quotient * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) return std::nullopt;
  if (t0 < 0) t0 += modulus;
  return static_cast<std::uint64_t>(t0);
}

constexpr bool is_power_of_two(std::uint64_t value) noexcept {
  return value != 0 && (value & (value - 1)) == 0;
}

}  // namespace diffspec::numeric
