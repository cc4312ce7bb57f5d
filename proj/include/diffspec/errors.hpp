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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace diffspec {

// Bad input: out-of-range degree or element, reducible modulus, a = 0, ...
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ReducibleModulusError : public ValidationError {
 public:
  ReducibleModulusError(const std::string& what, std::uint64_t factor)
      : ValidationError(what), factor_(factor) {}

  std::uint64_t factor() const noexcept { return factor_; }

 private:
  std::uint64_t factor_;
};

// A sweep would exceed the table-size ceiling (m <= 24, or lower via
// DIFFSPEC_MAX_M).
class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A structural claim of the case analysis failed at runtime. This is a
// finding about the mathematics (or an arithmetic bug), never an input error.
class TheoremViolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace diffspec
