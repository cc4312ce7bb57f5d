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

/// @file gf2m.hpp
/// Arithmetic in GF(2^m), 4 <= m <= 24, polynomial basis.
///
/// An element is a packed bit vector: bit i is the coefficient of x^i. The
/// modulus is a bit vector of length m + 1 whose top bit is the x^m term, so
/// x^8 + x^4 + x^3 + x + 1 is 0x11b.
///
/// Besides the ring operations the field exposes the pieces the power-function
/// analysis leans on: Frobenius powers, absolute and relative traces, square
/// roots, membership in multiplicative subgroups mu_s and in subfields, and a
/// solver for z^2 + z = c built once per field by Gaussian elimination of the
/// F_2-linear map z -> z^2 + z (the half-trace shortcut only works for odd m).
///
/// For m <= 16 multiplication goes through log/antilog tables; the schoolbook
/// routine stays available and the two agree bit for bit.

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diffspec/errors.hpp"
#include "diffspec/numeric.hpp"

namespace diffspec {

inline constexpr unsigned kMinDegree = 4;
inline constexpr unsigned kMaxDegree = 24;
inline constexpr unsigned kTableDegree = 16;

struct Element {
  std::uint32_t bits = 0;

  constexpr bool is_zero() const noexcept { return bits == 0; }
  constexpr auto operator<=>(const Element&) const = default;
};

// Addition is XOR in every binary field; no field context is needed.
constexpr Element operator+(Element a, Element b) noexcept {
  return Element{a.bits ^ b.bits};
}

// Polynomials over F_2 packed into a 64-bit word.
namespace gf2poly {

constexpr int degree(std::uint64_t p) noexcept {
  return p == 0 ? -1 : 63 - std::countl_zero(p);
}

constexpr std::uint64_t remainder(std::uint64_t a, std::uint64_t m) noexcept {
  const int dm = degree(m);
  for (int da = degree(a); da >= dm; da = degree(a)) a ^= m << (da - dm);
  return a;
}

// Smallest (hence irreducible) factor of degree 1..deg(p)/2, if any.
inline std::optional<std::uint64_t> smallest_factor(std::uint64_t p) {
  const int dp = degree(p);
  for (int df = 1; 2 * df <= dp; ++df) {
    for (std::uint64_t f = std::uint64_t{1} << df;
         f < (std::uint64_t{1} << (df + 1)); ++f) {
      if (remainder(p, f) == 0) return f;
    }
  }
  return std::nullopt;
}

inline bool is_irreducible(std::uint64_t p) {
  return degree(p) >= 1 && !smallest_factor(p);
}

inline std::uint64_t smallest_irreducible(unsigned deg) {
  for (std::uint64_t p = (std::uint64_t{1} << deg) | 1;
       p < (std::uint64_t{1} << (deg + 1)); p += 2) {
    if (is_irreducible(p)) return p;
  }
  return 0;  // unreachable: irreducibles exist in every degree
}

inline std::string to_string(std::uint64_t p) {
  if (p == 0) return "0";
  std::string out;
  for (int i = degree(p); i >= 0; --i) {
    if (((p >> i) & 1) == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += '1';
    } else if (i == 1) {
      out += 'x';
    } else {
      out += "x^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace gf2poly

/// Solves z^2 + z = c.
///
/// Keeps an echelon basis of the image of L(z) = z^2 + z, one row per pivot
/// bit, each row paired with a preimage. The image is the trace-zero
/// hyperplane and the kernel is {0, 1}, so solutions come in pairs r, r + 1.
class ArtinSchreierSolver {
 public:
  ArtinSchreierSolver() = default;

  // `images[i]` must be L(x^i).
  explicit ArtinSchreierSolver(std::span<const std::uint32_t> images) {
    for (std::size_t i = 0; i < images.size(); ++i) {
      std::uint32_t image = images[i];
      std::uint32_t preimage = std::uint32_t{1} << i;
      while (image != 0) {
        const int top = 31 - std::countl_zero(image);
        Row& row = rows_[top];
        if (row.image == 0) {
          row = Row{image, preimage};
          ++rank_;
          break;
        }
        image ^= row.image;
        preimage ^= row.preimage;
      }
    }
  }

  unsigned rank() const noexcept { return rank_; }

  /// Both roots, ascending, or nothing when c has absolute trace 1.
  std::vector<Element> solve(Element c) const {
    std::uint32_t residue = c.bits;
    std::uint32_t root = 0;
    while (residue != 0) {
      const int top = 31 - std::countl_zero(residue);
      const Row& row = rows_[top];
      if (row.image == 0) return {};
      residue ^= row.image;
      root ^= row.preimage;
    }
    const Element r{root};
    const Element s{root ^ 1u};
    return r < s ? std::vector<Element>{r, s} : std::vector<Element>{s, r};
  }

 private:
  struct Row {
    std::uint32_t image = 0;
    std::uint32_t preimage = 0;
  };
  std::array<Row, 32> rows_{};
  unsigned rank_ = 0;
};

class BinaryField {
 public:
  /// Builds GF(2^degree). Without a modulus the lexicographically smallest
  /// irreducible polynomial of that degree is used.
  explicit BinaryField(unsigned degree,
                       std::optional<std::uint64_t> modulus = std::nullopt)
      : degree_(degree) {
    if (degree < kMinDegree || degree > kMaxDegree) {
      throw ValidationError("field degree " + std::to_string(degree) +
                            " outside [" + std::to_string(kMinDegree) + ", " +
                            std::to_string(kMaxDegree) + "]");
    }
    if (modulus) {
      if (gf2poly::degree(*modulus) != static_cast<int>(degree)) {
        throw ValidationError("modulus " + gf2poly::to_string(*modulus) +
                              " does not have degree " +
                              std::to_string(degree));
      }
      if (auto factor = gf2poly::smallest_factor(*modulus)) {
        throw ReducibleModulusError(
            "modulus " + gf2poly::to_string(*modulus) +
                " is reducible, factor " + gf2poly::to_string(*factor),
            *factor);
      }
      modulus_ = *modulus;
    } else {
      modulus_ = gf2poly::smallest_irreducible(degree);
    }
    mask_ = static_cast<std::uint32_t>((std::uint64_t{1} << degree) - 1);
    group_order_ = mask_;
    generator_ = find_generator();
    if (degree <= kTableDegree) build_tables();

    std::vector<std::uint32_t> images(degree);
    for (unsigned i = 0; i < degree; ++i) {
      const Element basis{std::uint32_t{1} << i};
      images[i] = (square(basis) + basis).bits;
    }
    solver_ = ArtinSchreierSolver(images);
  }

  unsigned degree() const noexcept { return degree_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  /// 2^m.
  std::uint64_t size() const noexcept { return std::uint64_t{mask_} + 1; }
  /// 2^m - 1, the order of the multiplicative group.
  std::uint64_t group_order() const noexcept { return group_order_; }
  bool has_tables() const noexcept { return tables_ != nullptr; }
  Element generator() const noexcept { return generator_; }

  static constexpr Element zero() noexcept { return Element{0}; }
  static constexpr Element one() noexcept { return Element{1}; }

  bool contains(Element a) const noexcept { return a.bits <= mask_; }

  /// The only way to mint an element from raw bits: rejects values >= 2^m,
  /// which is how an element of another field is caught.
  Element element(std::uint64_t bits) const {
    if (bits > mask_) {
      throw ValidationError("element 0x" + hex(bits) + " is not in GF(2^" +
                            std::to_string(degree_) + ")");
    }
    return Element{static_cast<std::uint32_t>(bits)};
  }

  Element add(Element a, Element b) const noexcept { return a + b; }

  Element mul(Element a, Element b) const noexcept {
    assert(contains(a) && contains(b));
    if (tables_) {
      if (a.is_zero() || b.is_zero()) return zero();
      return Element{tables_->exp[tables_->log[a.bits] + tables_->log[b.bits]]};
    }
    return mul_schoolbook(a, b);
  }

  /// Shift-and-add with the reduction folded into every step.
  Element mul_schoolbook(Element a, Element b) const noexcept {
    std::uint32_t acc = 0;
    std::uint32_t shifted = a.bits;
    const std::uint32_t top = std::uint32_t{1} << degree_;
    const auto low = static_cast<std::uint32_t>(modulus_);
    for (std::uint32_t rest = b.bits; rest != 0; rest >>= 1) {
      if (rest & 1u) acc ^= shifted;
      shifted <<= 1;
      if (shifted & top) shifted ^= low;
    }
    return Element{acc};
  }

  Element square(Element a) const noexcept { return mul(a, a); }

  /// a^e, with pow(0, 0) = 1. The exponent is reduced mod 2^m - 1 for a != 0.
  Element pow(Element a, std::uint64_t e) const noexcept {
    if (a.is_zero()) return e == 0 ? one() : zero();
    const std::uint64_t reduced = e % group_order_;
    if (tables_) {
      const std::uint64_t log = tables_->log[a.bits];
      return Element{tables_->exp[(log * reduced) % group_order_]};
    }
    return pow_schoolbook(a, reduced);
  }

  Element inv(Element a) const {
    if (a.is_zero()) throw ValidationError("zero has no inverse");
    if (tables_) {
      return Element{tables_->exp[group_order_ - tables_->log[a.bits]]};
    }
    return pow_schoolbook(a, group_order_ - 1);
  }

  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  /// a^(2^k) by k squarings; 0 <= k < m.
  Element frobenius_pow(Element a, unsigned k) const {
    if (k >= degree_) {
      throw ValidationError("Frobenius index " + std::to_string(k) +
                            " must be below the degree " +
                            std::to_string(degree_));
    }
    for (unsigned i = 0; i < k; ++i) a = square(a);
    return a;
  }

  /// The unique r with r^2 = a.
  Element sqrt(Element a) const { return frobenius_pow(a, degree_ - 1); }

  /// Tr^m_1(a) as 0 or 1.
  int abs_trace(Element a) const {
    return subfield_abs_trace(a, degree_);
  }

  /// Tr^k_1(a) for a in the subfield GF(2^k).
  int subfield_abs_trace(Element a, unsigned sub_degree) const {
    require_divisor(sub_degree);
    Element sum = zero();
    Element term = a;
    for (unsigned i = 0; i < sub_degree; ++i) {
      sum = sum + term;
      term = square(term);
    }
    if (term != a) {
      throw ValidationError("element is not in the subfield of degree " +
                            std::to_string(sub_degree));
    }
    if (sum.bits > 1) throw TheoremViolated("absolute trace left F_2");
    return static_cast<int>(sum.bits);
  }

  /// Tr^m_k(a) = sum over i < m/k of a^(2^(ik)); lands in GF(2^k).
  Element rel_trace(Element a, unsigned sub_degree) const {
    require_divisor(sub_degree);
    Element sum = zero();
    Element term = a;
    for (unsigned i = 0; i < degree_ / sub_degree; ++i) {
      sum = sum + term;
      for (unsigned j = 0; j < sub_degree; ++j) term = square(term);
    }
    if (!in_subfield(sum, sub_degree)) {
      throw TheoremViolated("relative trace left the subfield");
    }
    return sum;
  }

  /// a in mu_s, i.e. a != 0 and a^s = 1.
  bool in_mu(Element a, std::uint64_t s) const noexcept {
    return !a.is_zero() && pow(a, s) == one();
  }

  bool in_subfield(Element a, unsigned sub_degree) const {
    require_divisor(sub_degree);
    Element image = a;
    for (unsigned i = 0; i < sub_degree; ++i) image = square(image);
    return image == a;
  }

  /// GF(2^k) inside this field, ascending.
  std::vector<Element> subfield_elements(unsigned sub_degree) const {
    require_divisor(sub_degree);
    std::vector<Element> out = mu_elements((std::uint64_t{1} << sub_degree) - 1);
    out.push_back(zero());
    std::sort(out.begin(), out.end());
    return out;
  }

  /// mu_s = mu_gcd(s, 2^m - 1), ascending.
  std::vector<Element> mu_elements(std::uint64_t s) const {
    const std::uint64_t order = std::gcd(s, group_order_);
    const Element step = pow(generator_, group_order_ / order);
    std::vector<Element> out;
    out.reserve(order);
    Element cur = one();
    for (std::uint64_t i = 0; i < order; ++i) {
      out.push_back(cur);
      cur = mul(cur, step);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Roots of z^2 + z = c; empty iff Tr(c) = 1.
  std::vector<Element> solve_artin_schreier(Element c) const {
    return solver_.solve(c);
  }

  /// Roots of x^2 + beta x + gamma = 0, ascending.
  std::vector<Element> solve_quadratic(Element beta, Element gamma) const {
    if (beta.is_zero()) return {sqrt(gamma)};
    const Element c = div(gamma, square(beta));
    std::vector<Element> roots;
    for (Element z : solver_.solve(c)) roots.push_back(mul(beta, z));
    std::sort(roots.begin(), roots.end());
    return roots;
  }

  const ArtinSchreierSolver& artin_schreier() const noexcept { return solver_; }

  /// `m=<int> poly=0x<hex>`.
  std::string description() const {
    return "m=" + std::to_string(degree_) + " poly=0x" + hex(modulus_);
  }

  /// Zero-padded to ceil(m/4) digits, most significant first.
  std::string format(Element a) const {
    std::string digits = hex(a.bits);
    const std::size_t width = (degree_ + 3) / 4;
    if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
    return "0x" + digits;
  }

  Element parse(std::string_view text) const {
    return element(parse_hex(text));
  }

  friend bool operator==(const BinaryField& a, const BinaryField& b) noexcept {
    return a.degree_ == b.degree_ && a.modulus_ == b.modulus_;
  }

  static std::string hex(std::uint64_t value) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%llx",
                  static_cast<unsigned long long>(value));
    return buf;
  }

  static std::uint64_t parse_hex(std::string_view text) {
    if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
    if (text.empty() || text.size() > 16) {
      throw ValidationError("malformed hex value '" + std::string(text) + "'");
    }
    std::uint64_t value = 0;
    for (char ch : text) {
      int digit;
      if (ch >= '0' && ch <= '9') {
        digit = ch - '0';
      } else if (ch >= 'a' && ch <= 'f') {
        digit = ch - 'a' + 10;
      } else if (ch >= 'A' && ch <= 'F') {
        digit = ch - 'A' + 10;
      } else {
        throw ValidationError("malformed hex value '" + std::string(text) + "'");
      }
      value = (value << 4) | static_cast<std::uint64_t>(digit);
    }
    return value;
  }

 private:
  struct LogTables {
    std::vector<std::uint32_t> log;
    std::vector<std::uint32_t> exp;  // 2 * (2^m - 1) entries, no wraparound
  };

  void require_divisor(unsigned sub_degree) const {
    if (sub_degree == 0 || degree_ % sub_degree != 0) {
      throw ValidationError(std::to_string(sub_degree) + " does not divide " +
                            std::to_string(degree_));
    }
  }

  Element pow_schoolbook(Element a, std::uint64_t e) const noexcept {
    Element result = one();
    for (; e != 0; e >>= 1) {
      if (e & 1) result = mul_schoolbook(result, a);
      a = mul_schoolbook(a, a);
    }
    return result;
  }

  Element find_generator() const {
    const auto primes = numeric::prime_factors(group_order_);
    for (std::uint32_t candidate = 2; candidate <= mask_; ++candidate) {
      const Element g{candidate};
      const bool primitive = std::all_of(
          primes.begin(), primes.end(), [&](std::uint64_t p) {
            return pow_schoolbook(g, group_order_ / p) != one();
          });
      if (primitive) return g;
    }
    return one();  // only reachable for GF(2)
  }

  void build_tables() {
    auto tables = std::make_shared<LogTables>();
    tables->log.assign(std::size_t{mask_} + 1, 0);
    tables->exp.resize(2 * group_order_);
    Element cur = one();
    for (std::uint64_t i = 0; i < group_order_; ++i) {
      tables->exp[i] = cur.bits;
      tables->exp[i + group_order_] = cur.bits;
      tables->log[cur.bits] = static_cast<std::uint32_t>(i);
      cur = mul_schoolbook(cur, generator_);
    }
    tables_ = std::move(tables);
  }

  unsigned degree_;
  std::uint64_t modulus_ = 0;
  std::uint32_t mask_ = 0;
  std::uint64_t group_order_ = 0;
  Element generator_{};
  std::shared_ptr<const LogTables> tables_;
  ArtinSchreierSolver solver_;
};

/// Parses `m=<int> poly=0x<hex>`.
inline BinaryField parse_field_description(std::string_view text) {
  const auto m_pos = text.find("m=");
  const auto poly_pos = text.find("poly=");
  if (m_pos != 0 || poly_pos == std::string_view::npos) {
    throw ValidationError("expected 'm=<int> poly=0x<hex>', got '" +
                          std::string(text) + "'");
  }
  std::string_view m_text = text.substr(2, poly_pos - 2);
  while (!m_text.empty() && m_text.back() == ' ') m_text.remove_suffix(1);
  unsigned degree = 0;
  for (char ch : m_text) {
    if (ch < '0' || ch > '9' || degree > 1000) {
      throw ValidationError("malformed degree in '" + std::string(text) + "'");
    }
    degree = degree * 10 + static_cast<unsigned>(ch - '0');
  }
  if (m_text.empty()) {
    throw ValidationError("malformed degree in '" + std::string(text) + "'");
  }
  return BinaryField(degree,
                     BinaryField::parse_hex(text.substr(poly_pos + 5)));
}

}  // namespace diffspec
