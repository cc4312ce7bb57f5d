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

/// @file run.hpp
/// The four CLI commands as plain functions: config in, record out.
///
/// A payload depends only on the config; timestamps and durations live in the
/// surrounding RunRecord so payloads can be compared byte for byte.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <optional>
#include <string>

#include "diffspec/errors.hpp"
#include "diffspec/gf2m.hpp"
#include "diffspec/powerfn.hpp"
#include "diffspec/report.hpp"
#include "diffspec/theorem.hpp"

namespace diffspec {

enum class Command { kSpectrum, kVerify, kDelta, kFieldInfo };
enum class Method { kBrute, kStructured, kClosedForm, kAll };
enum class Format { kJson, kCsv, kTable };

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitGuard = 2;
inline constexpr int kExitTheorem = 3;

struct RunConfig {
  Command command = Command::kSpectrum;
  std::optional<unsigned> n;
  std::optional<unsigned> m;
  std::optional<std::uint64_t> d;
  std::optional<std::uint64_t> modulus;
  Method method = Method::kAll;
  Format format = Format::kJson;
  std::string out_path;
  std::string log_path;
  std::optional<std::string> a;
  std::optional<std::string> b;
  unsigned threads = 0;
};

struct RunRecord {
  std::string timestamp;
  Json config;
  Json payload;
  double duration_ms = 0;
  int exit_code = kExitOk;

  Json to_json() const {
    Json out;
    out["timestamp"] = timestamp;
    out["config"] = config;
    out["result"] = payload;
    out["duration_ms"] = duration_ms;
    out["exit_code"] = exit_code;
    return out;
  }
};

constexpr std::string_view command_name(Command c) noexcept {
  switch (c) {
    case Command::kSpectrum: return "spectrum";
    case Command::kVerify: return "verify";
    case Command::kDelta: return "delta";
    case Command::kFieldInfo: return "field-info";
  }
  return "?";
}

constexpr std::string_view method_name(Method m) noexcept {
  switch (m) {
    case Method::kBrute: return "brute";
    case Method::kStructured: return "structured";
    case Method::kClosedForm: return "closed-form";
    case Method::kAll: return "all";
  }
  return "?";
}

inline Method parse_method(std::string_view text) {
  if (text == "brute") return Method::kBrute;
  if (text == "structured") return Method::kStructured;
  if (text == "closed-form") return Method::kClosedForm;
  if (text == "all") return Method::kAll;
  throw ValidationError("unknown method '" + std::string(text) + "'");
}

inline Format parse_format(std::string_view text) {
  if (text == "json") return Format::kJson;
  if (text == "csv") return Format::kCsv;
  if (text == "table") return Format::kTable;
  throw ValidationError("unknown format '" + std::string(text) + "'");
}

inline std::string render(const Json& payload, Format format) {
  switch (format) {
    case Format::kJson: return payload.dump(2) + "\n";
    case Format::kCsv: return to_csv(payload);
    case Format::kTable: return to_table(payload);
  }
  return {};
}

inline Json config_json(const RunConfig& c) {
  Json out;
  out["command"] = std::string(command_name(c.command));
  if (c.n) out["n"] = *c.n;
  if (c.m) out["m"] = *c.m;
  if (c.d) out["d"] = *c.d;
  if (c.modulus) out["modulus"] = modulus_hex(*c.modulus);
  out["method"] = std::string(method_name(c.method));
  if (c.a) out["a"] = *c.a;
  if (c.b) out["b"] = *c.b;
  return out;
}

/// Checks the selector rules and the sweep guard; returns the degree m.
inline unsigned validate(const RunConfig& c) {
  const bool family = c.n.has_value();
  const bool generic = c.m.has_value() || c.d.has_value();
  if (family == generic) {
    throw ValidationError("give exactly one of --n or --m/--d");
  }
  if (generic && !(c.m && c.d)) {
    throw ValidationError("--m and --d must be given together");
  }
  if (generic && (c.method == Method::kStructured ||
                  c.method == Method::kClosedForm)) {
    throw ValidationError("structured and closed-form methods need --n");
  }
  if (family && *c.n < 1) throw ValidationError("--n must be at least 1");
  const std::uint64_t m = family ? 4ull * *c.n : *c.m;
  if (m < kMinDegree) {
    throw ValidationError("m = " + std::to_string(m) + " is below " +
                          std::to_string(kMinDegree));
  }
  check_sweep_guard(static_cast<unsigned>(std::min<std::uint64_t>(m, 1000)));
  return static_cast<unsigned>(m);
}

namespace detail {

inline Json spectrum_payload(const RunConfig& c) {
  if (!c.n) {
    const PowerFunction f(BinaryField(*c.m, c.modulus), *c.d);
    return spectrum_document(f, spectrum_brute(f, c.threads));
  }
  const TheoremParams p(*c.n, c.modulus);
  const PowerFunction f = p.function();
  switch (c.method) {
    case Method::kBrute:
      return spectrum_document(f, spectrum_brute(f, c.threads));
    case Method::kStructured:
      return spectrum_document(f, spectrum_structured(p, c.threads));
    case Method::kClosedForm:
      return spectrum_document(f, spectrum_closed_form(p));
    case Method::kAll: break;
  }
  const Spectrum brute = spectrum_brute(f, c.threads);
  const Spectrum structured = spectrum_structured(p, c.threads);
  const Spectrum closed = spectrum_closed_form(p);
  Json out = spectrum_document(f, brute);
  out["n"] = p.n();
  out["brute"] = to_json(brute);
  out["structured"] = to_json(structured);
  out["closed_form"] = to_json(closed);
  out["agree"] = brute == structured && brute == closed;
  return out;
}

inline Json field_info_payload(const RunConfig& c) {
  Json out;
  if (c.n) {
    const TheoremParams p(*c.n, c.modulus);
    const BinaryField& f = p.field();
    out["n"] = p.n();
    out["m"] = p.m();
    out["poly"] = modulus_hex(f.modulus());
    out["field"] = f.description();
    out["d"] = p.d();
    out["gcd"] = std::gcd(p.d(), f.group_order());
    out["permutation"] = is_permutation_exponent(p.d(), p.m());
    out["niho"] = is_niho(p);
    out["congruence"] = check_congruence(p);
    out["mu_q_plus_1"] = f.mu_elements(p.q() + 1).size();
    return out;
  }
  const BinaryField f(*c.m, c.modulus);
  out["n"] = nullptr;
  out["m"] = f.degree();
  out["poly"] = modulus_hex(f.modulus());
  out["field"] = f.description();
  out["d"] = *c.d;
  out["gcd"] = std::gcd(*c.d, f.group_order());
  out["permutation"] = is_permutation_exponent(*c.d, f.degree());
  out["niho"] = nullptr;
  out["congruence"] = nullptr;
  out["mu_q_plus_1"] = nullptr;
  return out;
}

inline Json delta_payload(const RunConfig& c) {
  if (!c.a || !c.b) throw ValidationError("delta needs --a and --b");
  std::optional<TheoremParams> params;
  if (c.n) params.emplace(*c.n, c.modulus);
  const PowerFunction f = params ? params->function()
                                 : PowerFunction(BinaryField(*c.m, c.modulus), *c.d);
  const BinaryField& field = f.field();
  const Element a = field.parse(*c.a);
  const Element b = field.parse(*c.b);
  if (a.is_zero()) throw ValidationError("delta requires a != 0");

  Json out;
  out["m"] = field.degree();
  out["d"] = f.exponent();
  out["poly"] = modulus_hex(field.modulus());
  out["a"] = field.format(a);
  out["b"] = field.format(b);
  out["brute"] = delta(f, a, b);
  out["normalized_b"] = field.format(field.div(b, f(a)));
  out["normalized"] = delta_via_normalization(f, a, b);
  if (params && a == BinaryField::one()) {
    const CaseTrace trace = classify(*params, b);
    out["structured"] = trace.count;
    out["case"] = std::string(case_name(trace.kind));
    out["trace"] = to_json(field, trace);
  }
  return out;
}

inline std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace detail

/// Runs one command. Throws ValidationError, GuardError or TheoremViolated;
/// a verification that completes but fails is reported via exit_code.
inline RunRecord execute(const RunConfig& c) {
  validate(c);
  RunRecord record;
  record.timestamp = detail::utc_timestamp();
  record.config = config_json(c);
  const auto start = std::chrono::steady_clock::now();
  switch (c.command) {
    case Command::kSpectrum:
      record.payload = detail::spectrum_payload(c);
      break;
    case Command::kVerify: {
      if (!c.n) throw ValidationError("verify needs --n");
      const TheoremParams p(*c.n, c.modulus);
      const VerificationReport report = verify_conjecture(p, c.threads);
      record.payload = to_json(report);
      record.exit_code = report.pass ? kExitOk : kExitTheorem;
      break;
    }
    case Command::kDelta:
      record.payload = detail::delta_payload(c);
      break;
    case Command::kFieldInfo:
      record.payload = detail::field_info_payload(c);
      break;
  }
  record.duration_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return record;
}

/// Appends the record as one line of newline-delimited JSON.
inline void append_log(const std::string& path, const RunRecord& record) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw ValidationError("cannot open log file " + path);
  out << record.to_json().dump() << '\n';
}

}  // namespace diffspec
