// Copyright 2026 The vqbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vqbench/config.hpp"
#include "vqbench/experiment.hpp"
#include "vqbench/schedule.hpp"

namespace vqb {

/// "trace_007.csv"
std::string trace_file_name(int run);

/// Trace of one run: `# key = value` header lines, a CSV block with one row
/// per evaluation, then `# result key = value` footer lines.
void write_trace(std::ostream& out, const ExperimentConfig& config, const Problem& problem,
                 const ShotSchedule& schedule, const RunRecord& record);

/// One row per run: candidates, noiseless costs and errors.
void write_summary(std::ostream& out, const Problem& problem, const std::vector<RunRecord>& records);

/// Best-ever against favourite: run, seed, noisy_best, c_best, c_fav, the three
/// signed errors, noise-floor width.
void write_candidates(std::ostream& out, const std::vector<RunRecord>& records);

/// Parsed trace file. Rows are kept only when requested.
struct TraceRow {
  std::int64_t evaluation = 0;
  int stage = 0;
  std::int64_t shots = 0;
  std::int64_t cumulative_shots = 0;
  double value = 0.0;
  std::vector<double> params;
};

struct TraceFile {
  std::filesystem::path path;
  std::map<std::string, std::string> header;
  std::map<std::string, std::string> result;
  std::vector<TraceRow> rows;

  /// Header or result value; throws std::runtime_error naming the file when absent.
  const std::string& get(const std::string& key) const;
  double number(const std::string& key) const;
  bool complete() const { return !result.empty(); }
};

TraceFile read_trace(const std::filesystem::path& path, bool with_rows = false);

/// Mean and two-sided 95% Student-t interval of one group.
struct PanelRow {
  std::string group;
  std::vector<double> points;
  double mean = 0.0;
  std::optional<double> ci_low;
  std::optional<double> ci_high;
};

PanelRow summarize_group(std::string group, std::vector<double> points);
void write_panel(std::ostream& out, const std::vector<PanelRow>& rows);

/// `vqbench analyze`: reads trace files (directories are searched for
/// trace_*.csv) and writes, per system, relative_error_<system>.csv (groups
/// label | optimizer | budget | schedule | candidate) and
/// best_vs_favourite_<system>.csv (signed errors of the noisy best, the
/// noiseless best and the noiseless favourite). Returns the files written.
std::vector<std::filesystem::path> cmd_analyze(const std::vector<std::filesystem::path>& inputs,
                                               const std::filesystem::path& out_dir);

}  // namespace vqb
