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

// diffspec: differential spectra of power functions over GF(2^m).
//
//   diffspec spectrum   --n 2 --method all
//   diffspec spectrum   --m 4 --d 3 --method brute
//   diffspec verify     --n 3 [--modulus 0x...]
//   diffspec delta      --n 2 --a 0x01 --b 0x01
//   diffspec field-info --n 2

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "diffspec/diffspec.hpp"

namespace {

struct Options {
  unsigned n = 0;
  unsigned m = 0;
  std::uint64_t d = 0;
  std::string modulus;
  std::string method;
  std::string format = "json";
  std::string out;
  std::string log;
  std::string a;
  std::string b;
  unsigned threads = 0;
};

void add_common(CLI::App* cmd, Options& o, bool with_method) {
  cmd->add_option("--n", o.n, "family index: m = 4n, d = 2^{3n}+2^{2n}+2^n-1");
  cmd->add_option("--m", o.m, "field degree (with --d)");
  cmd->add_option("--d", o.d, "exponent (with --m)");
  cmd->add_option("--modulus", o.modulus, "irreducible modulus as 0xHEX");
  if (with_method) {
    cmd->add_option("--method", o.method, "brute|structured|closed-form|all");
  }
  cmd->add_option("--format", o.format, "json|csv|table");
  cmd->add_option("--out", o.out, "write the result here instead of stdout");
  cmd->add_option("--log", o.log, "append a JSON line per run to this file");
  cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)");
}

diffspec::RunConfig to_config(diffspec::Command command, const CLI::App& cmd,
                              const Options& o) {
  using namespace diffspec;
  RunConfig c;
  c.command = command;
  if (cmd.count("--n")) c.n = o.n;
  if (cmd.count("--m")) c.m = o.m;
  if (cmd.count("--d")) c.d = o.d;
  if (!o.modulus.empty()) c.modulus = BinaryField::parse_hex(o.modulus);
  c.method = o.method.empty() ? Method::kAll : parse_method(o.method);
  c.format = parse_format(o.format);
  c.out_path = o.out;
  c.log_path = o.log;
  if (command == Command::kDelta) {
    c.a = o.a;
    c.b = o.b;
  }
  c.threads = o.threads;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace diffspec;
  CLI::App app{"Differential spectra of power functions over GF(2^m)"};
  app.require_subcommand(1);

  Options o;
  auto* spectrum = app.add_subcommand("spectrum", "compute the differential spectrum");
  auto* verify = app.add_subcommand("verify", "three-way check of the d = q^3+q^2+q-1 family");
  auto* delta_cmd = app.add_subcommand("delta", "count solutions of F(x+a)+F(x)=b");
  auto* info = app.add_subcommand("field-info", "field and exponent facts");
  add_common(spectrum, o, true);
  add_common(verify, o, true);
  add_common(delta_cmd, o, false);
  add_common(info, o, false);
  delta_cmd->add_option("--a", o.a, "0xHEX, nonzero")->required();
  delta_cmd->add_option("--b", o.b, "0xHEX")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    RunConfig config;
    if (*spectrum) config = to_config(Command::kSpectrum, *spectrum, o);
    if (*verify) config = to_config(Command::kVerify, *verify, o);
    if (*delta_cmd) config = to_config(Command::kDelta, *delta_cmd, o);
    if (*info) config = to_config(Command::kFieldInfo, *info, o);

    const RunRecord record = execute(config);
    const std::string text = render(record.payload, config.format);
    if (config.out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(config.out_path);
      if (!out) throw ValidationError("cannot open " + config.out_path);
      out << text;
    }
    if (!config.log_path.empty()) append_log(config.log_path, record);
    return record.exit_code;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const TheoremViolated& e) {
    std::cerr << "theorem violated: " << e.what() << '\n';
    return kExitTheorem;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}
