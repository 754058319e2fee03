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

#include "cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <functional>
#include <nlohmann/json.hpp>

#include "ragged/buffers.hpp"
#include "ragged/error.hpp"
#include "ragged/kernels.hpp"

namespace ragged::cli {

namespace fs = std::filesystem;

namespace {

// Runs `body`, mapping library exceptions onto the exit-code contract.
Report run(const std::string& command, const std::function<void(Report&)>& body) {
  Report r;
  r.command = command;
  auto fail = [&](int code, const std::string& msg) {
    r.exit_code = code;
    r.diagnostics.push_back(msg);
  };
  try {
    body(r);
  } catch (const IoError& e) {
    fail(kIoError, e.what());
  } catch (const FormatError& e) {
    fail(kFormatError, e.what());
  } catch (const LayoutError& e) {
    fail(kLayoutError, e.what());
  } catch (const fs::filesystem_error& e) {
    fail(kIoError, e.what());
  } catch (const Error& e) {
    fail(kLayoutError, e.what());
  }
  return r;
}

template <class F>
double best_seconds(int repetitions, F&& f) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < repetitions; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

}  // namespace

std::string format_number(double d) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), d);
  std::string s(buf, end);
  if (std::isfinite(d) && s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["status"] = ok() ? "ok" : "error";
  j["exit_code"] = exit_code;
  auto m = nlohmann::ordered_json::object();
  for (const auto& [k, v] : metrics) {
    // JSON has no NaN/Inf.
    if (std::isfinite(v)) m[k] = v;
  }
  j["metrics"] = std::move(m);
  j["diagnostics"] = diagnostics;
  return j.dump();
}

Report cmd_inspect(const fs::path& path) {
  return run("inspect", [&](Report& r) {
    auto c = read_container(path);
    auto form = emit_form(c.form);
    r.metrics["length"] = static_cast<double>(c.length);
    r.metrics["buffers"] = static_cast<double>(c.buffers.size());
    r.lines.push_back("form: " + form);
    r.lines.push_back("length: " + std::to_string(c.length));
    r.diagnostics.push_back("form: " + form);
    for (const auto& [name, buf] : c.buffers.entries()) {
      r.metrics["bytes." + name] = static_cast<double>(buf.size());
      r.lines.push_back("buffer " + name + ": " + std::to_string(buf.size()) + " B");
    }
  });
}

Report cmd_validate(const fs::path& path) {
  return run("validate", [&](Report& r) {
    auto c = read_container(path);
    auto node = from_buffers(c);
    r.metrics["length"] = static_cast<double>(node->length());
    r.lines.push_back("ok: " + std::string(kind_name(node->kind())) + " of length " +
                      std::to_string(node->length()));
  });
}

Report cmd_roundtrip(const fs::path& path, const fs::path& out) {
  return run("roundtrip", [&](Report& r) {
    std::error_code ec;
    if (out.empty() || fs::weakly_canonical(path, ec) == fs::weakly_canonical(out, ec)) {
      throw FormatError("refusing to overwrite the input container: " + out.string());
    }
    auto input = read_container(path);
    auto node = from_buffers(input);
    auto produced = to_buffers(*node);

    std::size_t aliased = 0;
    for (const auto& [name, buf] : produced.buffers.entries()) {
      for (const auto& [_, src] : input.buffers.entries()) {
        if (buf.aliases(src)) {
          ++aliased;
          break;
        }
      }
    }
    write_container(produced, out);
    auto reread = from_buffers(read_container(out));

    auto copied = input.buffers.copy_counter() + produced.buffers.copy_counter();
    r.metrics["length"] = static_cast<double>(produced.length);
    r.metrics["bytes_copied"] = static_cast<double>(copied);
    r.metrics["buffers"] = static_cast<double>(produced.buffers.size());
    r.metrics["buffers_aliased"] = static_cast<double>(aliased);

    if (to_list(*reread) != to_list(*node)) {
      r.exit_code = kMismatch;
      r.diagnostics.push_back("round-trip mismatch: to_list differs after write/read");
    } else if (copied != 0) {
      r.exit_code = kMismatch;
      r.diagnostics.push_back("round trip copied " + std::to_string(copied) + " bytes");
    } else {
      r.lines.push_back("ok: wrote " + out.string() + ", bytes_copied 0");
    }
  });
}

Report cmd_dimuon(const DimuonOptions& opts) {
  return run("dimuon", [&](Report& r) {
    auto batch = [&] {
      if (opts.gen) return gen_events(*opts.gen, opts.seed);
      if (!opts.input) throw FormatError("dimuon needs a container path or --gen N");
      return EventBatch(from_buffers(read_container(*opts.input)));
    }();

    auto columnar = invariant_mass(batch);
    auto rowwise = invariant_mass_rowwise(batch);

    double max_rel = 0.0;
    bool same_size = columnar.size() == rowwise.size();
    if (same_size) {
      for (std::int64_t i = 0; i < columnar.size(); ++i) {
        double a = columnar[i], b = rowwise[i];
        max_rel = std::max(max_rel, std::abs(a - b) / std::max(std::abs(b), 1e-300));
      }
    }
    r.metrics["events"] = static_cast<double>(batch.size());
    r.metrics["selected"] = static_cast<double>(columnar.size());
    r.metrics["max_rel_diff"] = same_size ? max_rel : 1.0;

    if (opts.bench) {
      double t_col = best_seconds(opts.repetitions, [&] { (void)invariant_mass(batch); });
      double t_row = best_seconds(opts.repetitions, [&] { (void)invariant_mass_rowwise(batch); });
      r.metrics["columnar_seconds"] = t_col;
      r.metrics["rowwise_seconds"] = t_row;
      r.metrics["speedup"] = t_col > 0 ? t_row / t_col : 0.0;
      r.metrics["repetitions"] = opts.repetitions;
      r.lines.push_back("columnar " + format_number(t_col) + " s, row-wise " +
                        format_number(t_row) + " s");
    }

    if (!same_size || max_rel > 1e-12) {
      r.exit_code = kMismatch;
      r.diagnostics.push_back("columnar and row-wise results differ");
      return;
    }
    if (opts.out) write_container(to_buffers(*columnar.node()), *opts.out);

    r.lines.push_back("selected " + std::to_string(columnar.size()) + " of " +
                      std::to_string(batch.size()) + " events");
    for (std::int64_t i = 0; i < std::min<std::int64_t>(columnar.size(), 10); ++i) {
      r.lines.push_back("  " + format_number(columnar[i]));
    }
  });
}

Report cmd_sum(const fs::path& path) {
  return run("sum", [&](Report& r) {
    auto node = from_buffers(read_container(path));
    double total = path_length(*node);
    r.metrics["sum"] = total;
    r.metrics["lists"] = static_cast<double>(node->length());
    r.lines.push_back(format_number(total));
  });
}

}  // namespace ragged::cli
