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

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ragged::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kFormatError = 2,
  kLayoutError = 3,
  kMismatch = 4,
};

/// Outcome of one command. `lines` is the human-readable output; --json
/// prints to_json() instead.
struct Report {
  std::string command;
  int exit_code = kOk;
  std::map<std::string, double> metrics;
  std::vector<std::string> diagnostics;
  std::vector<std::string> lines;

  bool ok() const { return exit_code == kOk; }
  std::string to_json() const;
};

struct DimuonOptions {
  std::optional<std::filesystem::path> input;
  std::optional<std::int64_t> gen;
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> out;
  bool bench = false;
  int repetitions = 5;
};

Report cmd_inspect(const std::filesystem::path& path);
Report cmd_validate(const std::filesystem::path& path);
Report cmd_roundtrip(const std::filesystem::path& path, const std::filesystem::path& out);
Report cmd_dimuon(const DimuonOptions& opts);
Report cmd_sum(const std::filesystem::path& path);

/// Formats a double in shortest round-trip form ("16.5", "0.0").
std::string format_number(double d);

}  // namespace ragged::cli
