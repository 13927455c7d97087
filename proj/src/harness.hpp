// Copyright 2026 The ixs Authors
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
#include <string>
#include <vector>

#include "core.hpp"

namespace ixs {

// One batch run: an instance file solved by one method.
struct RunSpec {
  std::string id;
  std::string family;
  std::string path;
  std::string method;  // "ixs" or "oracle"
  std::uint64_t seed = 0;
  double time_limit_s = 3600.0;
};

struct RunRecord {
  std::string id;
  std::string family;
  std::string method;
  std::string status;  // optimal | timeout | error
  Rat z;               // best upper bound on timeout; unset on error
  bool has_z = false;
  std::int64_t time_ms = 0;
  std::int64_t iterations = 0;
  double greedy_fraction = 0.0;
  std::string message;  // error detail, not part of the CSV
};

inline constexpr const char* kRunCsvHeader =
    "id,family,method,status,z_num,z_den,time_ms,iters,greedy_frac";

struct BatchOptions {
  int jobs = 1;            // >1 runs independent solves concurrently
  bool zero_times = false; // emit 0 in time columns for byte-stable output
  InitStrategy init = InitStrategy::trivial_only;
  int rho = 1;
  std::uint64_t oracle_cap = 0;  // 0 selects the per-family default
};

// Manifest: one run per line, "id family path method seed time_limit_s",
// '#' starts a comment. Relative instance paths are resolved by the caller's
// working directory.
std::vector<RunSpec> parse_manifest(const std::string& text);

RunRecord execute_run(const RunSpec& spec, const BatchOptions& opts);

// Runs every spec (concurrently when opts.jobs > 1), returning the records
// sorted by (id, method). Unreadable or oversized instances become
// status=error rows; the batch continues.
std::vector<RunRecord> run_batch(const std::vector<RunSpec>& specs,
                                 const BatchOptions& opts);

std::string records_to_csv(const std::vector<RunRecord>& records,
                           const BatchOptions& opts);

// Cumulative distributions of shifted time ratios (delta+1)/(min delta+1),
// with timed-out runs scored at their recorded (limit-clamped) time. Every
// method must cover the same instance set when more than one is present.
// Output CSV: "method,eta,fraction" at each observed ratio.
std::string compute_profile(const std::string& runs_csv);

}  // namespace ixs
