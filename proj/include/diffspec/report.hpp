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

/// @file report.hpp
/// JSON, CSV and plain-table encodings of spectra, case traces and
/// verification reports.
///
/// JSON objects keep insertion order, so spectrum keys come out as ascending
/// decimal multiplicities. CSV is a flattening of the same JSON into
/// `section,key,value` rows: top-level scalars go under section `meta`, nested
/// objects use their dotted path as the section, array items their index.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "diffspec/gf2m.hpp"
#include "diffspec/powerfn.hpp"
#include "diffspec/theorem.hpp"

namespace diffspec {

using Json = nlohmann::ordered_json;

inline std::string modulus_hex(std::uint64_t modulus) {
  return "0x" + BinaryField::hex(modulus);
}

inline Json to_json(const Spectrum& spectrum) {
  Json out = Json::object();
  for (const auto& [multiplicity, count] : spectrum.entries()) {
    out[std::to_string(multiplicity)] = count;
  }
  return out;
}

inline Spectrum spectrum_from_json(const Json& j, std::uint64_t field_size) {
  Spectrum spectrum(field_size);
  for (const auto& [key, value] : j.items()) {
    spectrum.add(std::stoull(key), value.get<std::uint64_t>());
  }
  return spectrum;
}

/// `{"m","d","poly","spectrum":{...},"uniformity"}`.
inline Json spectrum_document(const PowerFunction& f, const Spectrum& spectrum) {
  Json out;
  out["m"] = f.field().degree();
  out["d"] = f.exponent();
  out["poly"] = modulus_hex(f.field().modulus());
  out["spectrum"] = to_json(spectrum);
  out["uniformity"] = spectrum.uniformity();
  return out;
}

inline Json to_json(const BinaryField& f, const CaseTrace& trace) {
  Json out;
  out["b"] = f.format(trace.b);
  out["case"] = std::string(case_name(trace.kind));
  out["count"] = trace.count;
  if (trace.state) {
    const Case32State& s = *trace.state;
    out["A"] = f.format(s.a_value);
    out["B"] = f.format(s.b_value);
    out["C"] = f.format(s.c_value);
    if (trace.kind == ProofCase::kQuadratic) {
      out["trace"] = f.format(s.trace);
      out["linear"] = f.format(s.linear_coefficient);
      out["constant"] = f.format(s.constant_term);
      Json roots = Json::array();
      for (Element g : s.gamma_roots) roots.push_back(f.format(g));
      out["gamma"] = roots;
    }
  }
  return out;
}

/// `{"n","d","poly","pass","closed_form","brute","mismatches","conjecture"}`.
inline Json to_json(const VerificationReport& r) {
  const BinaryField field(r.m, r.modulus);
  Json out;
  out["n"] = r.n;
  out["d"] = r.d;
  out["poly"] = modulus_hex(r.modulus);
  out["pass"] = r.pass;
  out["closed_form"] = to_json(r.closed_form);
  out["brute"] = to_json(r.brute);
  out["structured"] = to_json(r.structured);
  Json mismatches = Json::array();
  for (const auto& mm : r.mismatches) {
    mismatches.push_back(
        {{"b", field.format(mm.b)}, {"structured", mm.structured}, {"brute", mm.brute}});
  }
  out["mismatches"] = mismatches;
  out["conjecture"] = {{"one_b_q2", r.conjecture.one_b_q2},
                       {"qn_values", r.conjecture.qn_values},
                       {"rest_le_2", r.conjecture.rest_le_2}};
  return out;
}

namespace detail {

inline std::string scalar_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "n/a";
  return value.dump();
}

inline void flatten(const Json& node, const std::string& section,
                    std::vector<std::array<std::string, 3>>& rows) {
  for (const auto& [key, value] : node.items()) {
    if (value.is_structured()) {
      const std::string path = section == "meta" ? key : section + "." + key;
      flatten(value, path, rows);
    } else {
      rows.push_back({section, key, scalar_text(value)});
    }
  }
}

}  // namespace detail

inline std::vector<std::array<std::string, 3>> csv_rows(const Json& payload) {
  std::vector<std::array<std::string, 3>> rows;
  detail::flatten(payload, "meta", rows);
  return rows;
}

inline std::string to_csv(const Json& payload) {
  std::ostringstream out;
  out << "section,key,value\n";
  for (const auto& row : csv_rows(payload)) {
    out << row[0] << ',' << row[1] << ',' << row[2] << '\n';
  }
  return out.str();
}

inline std::vector<std::array<std::string, 3>> parse_csv(const std::string& text) {
  std::vector<std::array<std::string, 3>> rows;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    const auto first = line.find(',');
    const auto second = line.find(',', first + 1);
    if (first == std::string::npos || second == std::string::npos) {
      throw ValidationError("malformed CSV row '" + line + "'");
    }
    rows.push_back({line.substr(0, first), line.substr(first + 1, second - first - 1),
                    line.substr(second + 1)});
  }
  return rows;
}

/// Human-readable: scalars as `key: value`, objects as indented blocks.
inline std::string to_table(const Json& payload) {
  std::ostringstream out;
  std::string current;
  for (const auto& [section, key, value] : csv_rows(payload)) {
    if (section == "meta") {
      out << key << ": " << value << '\n';
      continue;
    }
    if (section != current) {
      out << section << ":\n";
      current = section;
    }
    out << "  " << key;
    if (key.size() < 12) out << std::string(12 - key.size(), ' ');
    out << ' ' << value << '\n';
  }
  return out.str();
}

}  // namespace diffspec
