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

// Slow reference arithmetic for tests. Shares no code with the library:
// full carry-less product followed by long division, exponentiation by
// repeated multiplication, and per-b solution counting over all x.

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

inline int deg(std::uint64_t p) {
  int d = -1;
  for (int i = 0; i < 64; ++i) {
    if ((p >> i) & 1) d = i;
  }
  return d;
}

inline std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  for (int i = 0; i < 32; ++i) {
    if ((b >> i) & 1) r ^= a << i;
  }
  return r;
}

inline std::uint64_t reduce(std::uint64_t a, std::uint64_t modulus) {
  const int dm = deg(modulus);
  for (int i = 63; i >= dm; --i) {
    if ((a >> i) & 1) a ^= modulus << (i - dm);
  }
  return a;
}

// p is irreducible iff no product of two polynomials of degree >= 1 equals it.
inline bool irreducible_by_products(std::uint64_t p) {
  const int dp = deg(p);
  for (std::uint64_t f = 2; deg(f) <= dp / 2; ++f) {
    for (std::uint64_t g = std::uint64_t{1} << (dp - deg(f));
         deg(g) == dp - deg(f); ++g) {
      if (clmul(f, g) == p) return false;
    }
  }
  return true;
}

struct Field {
  unsigned m;
  std::uint64_t modulus;

  std::uint32_t size() const { return std::uint32_t{1} << m; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(reduce(clmul(a, b), modulus));
  }
  // Plain square-and-multiply over the reference multiplication, exponent
  // not reduced.
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint32_t inv(std::uint32_t a) const {
    for (std::uint32_t b = 1; b < size(); ++b) {
      if (mul(a, b) == 1) return b;
    }
    return 0;
  }
};

// omega_i by counting, for each b, the x with (x+1)^d + x^d = b: O(4^m).
inline std::map<std::uint64_t, std::uint64_t> spectrum_by_counting(
    const Field& f, std::uint64_t d) {
  std::vector<std::uint32_t> values(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) values[x] = f.pow(x, d);
  std::map<std::uint64_t, std::uint64_t> out;
  for (std::uint32_t b = 0; b < f.size(); ++b) {
    std::uint64_t count = 0;
    for (std::uint32_t x = 0; x < f.size(); ++x) {
      if ((values[x ^ 1u] ^ values[x]) == b) ++count;
    }
    ++out[count];
  }
  return out;
}

}  // namespace oracle
