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

/// @file powerfn.hpp
/// Exhaustive differential analysis of x^d over any BinaryField.
///
/// Nothing here knows about a particular exponent family. The spectrum of a
/// monomial only needs the row a = 1 of the difference table, because
/// delta(a, b) = delta(1, b / a^d); that row is the histogram of the
/// derivative x -> F(x + 1) + F(x), one pass over the field.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "diffspec/errors.hpp"
#include "diffspec/gf2m.hpp"
#include "diffspec/parallel.hpp"

namespace diffspec {

/// Largest degree a 2^m sweep may touch: 24, or less via DIFFSPEC_MAX_M.
inline unsigned max_sweep_degree() {
  unsigned limit = kMaxDegree;
  if (const char* env = std::getenv("DIFFSPEC_MAX_M")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0 &&
        value < static_cast<long>(limit)) {
      limit = static_cast<unsigned>(value);
    }
  }
  return limit;
}

inline void check_sweep_guard(unsigned degree) {
  const unsigned limit = max_sweep_degree();
  if (degree > limit) {
    throw GuardError("m = " + std::to_string(degree) +
                     " exceeds the sweep limit m <= " + std::to_string(limit));
  }
}

/// gcd(d, 2^m - 1) = 1, i.e. x^d permutes GF(2^m).
inline bool is_permutation_exponent(std::uint64_t d, unsigned m) {
  if (m == 0 || m > 63) throw ValidationError("degree out of range");
  return std::gcd(d, (std::uint64_t{1} << m) - 1) == 1;
}

class PowerFunction {
 public:
  PowerFunction(BinaryField field, std::uint64_t exponent)
      : field_(std::move(field)), exponent_(exponent) {}

  const BinaryField& field() const noexcept { return field_; }
  std::uint64_t exponent() const noexcept { return exponent_; }

  /// d mod (2^m - 1); same map on nonzero inputs, and 0 -> 0 unless d = 0.
  std::uint64_t reduced_exponent() const noexcept {
    return exponent_ % field_.group_order();
  }

  Element operator()(Element x) const noexcept {
    return field_.pow(x, exponent_);
  }

 private:
  BinaryField field_;
  std::uint64_t exponent_;
};

/// omega_i = #{b : delta(1, b) = i}, stored for every i with omega_i > 0.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::uint64_t field_size) : field_size_(field_size) {}

  /// Accumulates, so colliding buckets merge by summation.
  void add(std::uint64_t multiplicity, std::uint64_t count) {
    if (count == 0) return;
    entries_[multiplicity] += count;
  }

  std::uint64_t field_size() const noexcept { return field_size_; }
  const std::map<std::uint64_t, std::uint64_t>& entries() const noexcept {
    return entries_;
  }

  std::uint64_t count(std::uint64_t multiplicity) const {
    const auto it = entries_.find(multiplicity);
    return it == entries_.end() ? 0 : it->second;
  }

  /// Largest multiplicity present: the differential uniformity.
  std::uint64_t uniformity() const noexcept {
    return entries_.empty() ? 0 : entries_.rbegin()->first;
  }

  bool all_even() const noexcept {
    for (const auto& [i, count] : entries_) {
      if (i % 2 != 0) return false;
    }
    return true;
  }

  /// sum omega_i = 2^m and sum i * omega_i = 2^m.
  bool sum_identities_hold() const noexcept {
    std::uint64_t total = 0;
    std::uint64_t weighted = 0;
    for (const auto& [i, count] : entries_) {
      total += count;
      weighted += i * count;
    }
    return total == field_size_ && weighted == field_size_;
  }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::uint64_t field_size_ = 0;
  std::map<std::uint64_t, std::uint64_t> entries_;
};

/// image[x] = F(x + 1) + F(x).
struct DerivativeTable {
  std::vector<std::uint32_t> image;
};

/// F(x) for every x, walking the cyclic group: F(g^k) = (g^d)^k.
inline std::vector<std::uint32_t> power_table(const PowerFunction& f,
                                              unsigned threads = 0) {
  const BinaryField& field = f.field();
  check_sweep_guard(field.degree());
  std::vector<std::uint32_t> values(field.size());
  values[0] = f(BinaryField::zero()).bits;
  const Element g = field.generator();
  const Element step = field.pow(g, f.exponent());
  parallel_for_chunks(field.group_order(), threads,
                      [&](std::size_t begin, std::size_t end) {
                        Element x = field.pow(g, begin);
                        Element y = field.pow(step, begin);
                        for (std::size_t k = begin; k < end; ++k) {
                          values[x.bits] = y.bits;
                          x = field.mul(x, g);
                          y = field.mul(y, step);
                        }
                      });
  return values;
}

inline DerivativeTable derivative_table(const PowerFunction& f,
                                        unsigned threads = 0) {
  const std::vector<std::uint32_t> values = power_table(f, threads);
  DerivativeTable table;
  table.image.resize(values.size());
  for (std::size_t x = 0; x < values.size(); ++x) {
    table.image[x] = values[x ^ 1u] ^ values[x];
  }
  return table;
}

/// counts[b] = delta(1, b), read off the derivative table.
inline std::vector<std::uint32_t> solution_counts(const DerivativeTable& table) {
  std::vector<std::uint32_t> counts(table.image.size(), 0);
  for (std::uint32_t b : table.image) ++counts[b];
  return counts;
}

/// All x with F(x + 1) + F(x) = b, ascending.
inline std::vector<Element> solutions(const DerivativeTable& table, Element b) {
  std::vector<Element> out;
  for (std::size_t x = 0; x < table.image.size(); ++x) {
    if (table.image[x] == b.bits) out.push_back(Element{static_cast<std::uint32_t>(x)});
  }
  return out;
}

inline Spectrum spectrum_from_counts(const std::vector<std::uint32_t>& counts) {
  std::map<std::uint64_t, std::uint64_t> histogram;
  for (std::uint32_t c : counts) ++histogram[c];
  Spectrum spectrum(counts.size());
  for (const auto& [multiplicity, count] : histogram) {
    spectrum.add(multiplicity, count);
  }
  return spectrum;
}

/// #{x : F(x + a) + F(x) = b}, by direct evaluation over every x.
inline std::uint64_t delta(const PowerFunction& f, Element a, Element b) {
  const BinaryField& field = f.field();
  if (!field.contains(a) || !field.contains(b)) {
    throw ValidationError("element outside the field");
  }
  if (a.is_zero()) throw ValidationError("delta requires a != 0");
  check_sweep_guard(field.degree());
  std::uint64_t count = 0;
  for (std::uint64_t bits = 0; bits < field.size(); ++bits) {
    const Element x{static_cast<std::uint32_t>(bits)};
    if (f(x + a) + f(x) == b) ++count;
  }
  return count;
}

/// delta(1, b / a^d), which equals delta(a, b) for a monomial.
inline std::uint64_t delta_via_normalization(const PowerFunction& f, Element a,
                                             Element b) {
  const BinaryField& field = f.field();
  if (a.is_zero()) throw ValidationError("delta requires a != 0");
  return delta(f, BinaryField::one(), field.div(b, f(a)));
}

inline Spectrum spectrum_brute(const PowerFunction& f, unsigned threads = 0) {
  return spectrum_from_counts(solution_counts(derivative_table(f, threads)));
}

inline std::uint64_t differential_uniformity(const PowerFunction& f,
                                             unsigned threads = 0) {
  return spectrum_brute(f, threads).uniformity();
}

}  // namespace diffspec
