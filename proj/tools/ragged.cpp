// Copyright 2026 The ragged Authors
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

// ragged: inspect, validate and benchmark on-disk array containers.
//
//   ragged inspect PATH
//   ragged validate PATH
//   ragged roundtrip PATH --out DIR
//   ragged dimuon [PATH] [--gen N --seed S] [--out DIR] [--bench]
//   ragged sum PATH
//
// Every command accepts --json. Exit codes: 0 ok, 1 I/O, 2 format,
// 3 validation/layout, 4 round-trip mismatch.

#include <CLI11.hpp>
#include <iostream>

#include "cli/commands.hpp"

namespace {

int emit(const ragged::cli::Report& r, bool json) {
  if (json) {
    std::cout << r.to_json() << "\n";
  } else {
    for (const auto& line : r.lines) std::cout << line << "\n";
    for (const auto& d : r.diagnostics) {
      if (!r.ok()) std::cerr << "error: " << d << "\n";
    }
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace ragged::cli;

  CLI::App app{"Inspect, validate and benchmark ragged array containers"};
  app.require_subcommand(1);

  bool json = false;
  std::string path;
  std::string out;
  DimuonOptions dimuon;
  std::int64_t gen = -1;

  auto add_common = [&](CLI::App* sub, bool path_required) {
    auto* opt = sub->add_option("PATH", path, "Container directory");
    if (path_required) opt->required();
    sub->add_flag("--json", json, "Print one JSON report object");
  };

  auto* inspect = app.add_subcommand("inspect", "Print form, length and buffer sizes");
  add_common(inspect, true);
  auto* validate = app.add_subcommand("validate", "Rebuild the array and check its invariants");
  add_common(validate, true);
  auto* roundtrip = app.add_subcommand("roundtrip", "Read, rebuild, re-serialize and write");
  add_common(roundtrip, true);
  roundtrip->add_option("--out", out, "Output container directory")->required();
  auto* dimu = app.add_subcommand("dimuon", "Dimuon invariant-mass selection");
  add_common(dimu, false);
  dimu->add_option("--out", out, "Write selected masses as a container");
  dimu->add_option("--gen", gen, "Generate N synthetic events instead of reading PATH")
      ->check(CLI::NonNegativeNumber);
  dimu->add_option("--seed", dimuon.seed, "Generator seed");
  dimu->add_flag("--bench", dimuon.bench, "Time columnar and row-wise kernels");
  dimu->add_option("--repetitions", dimuon.repetitions, "Timing repetitions (best is kept)")
      ->check(CLI::PositiveNumber);
  auto* sum = app.add_subcommand("sum", "Sum every element of a list of float64");
  add_common(sum, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kFormatError;
  }

  if (inspect->parsed()) return emit(cmd_inspect(path), json);
  if (validate->parsed()) return emit(cmd_validate(path), json);
  if (roundtrip->parsed()) return emit(cmd_roundtrip(path, out), json);
  if (sum->parsed()) return emit(cmd_sum(path), json);

  if (!path.empty()) dimuon.input = path;
  if (gen >= 0) dimuon.gen = gen;
  if (!out.empty()) dimuon.out = out;
  return emit(cmd_dimuon(dimuon), json);
}
