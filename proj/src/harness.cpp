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

#include "harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "instance.hpp"
#include "oracle.hpp"
#include "util.hpp"

namespace ixs {

std::vector<RunSpec> parse_manifest(const std::string& text) {
  std::vector<RunSpec> specs;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    RunSpec spec;
    if (!(ls >> spec.id)) continue;  // blank line
    std::string seed_tok, limit_tok;
    if (!(ls >> spec.family >> spec.path >> spec.method >> seed_tok >> limit_tok))
      fail(ErrorKind::parse, "manifest line " + std::to_string(lineno) +
                                 ": expected 'id family path method seed "
                                 "time_limit'");
    std::string extra;
    if (ls >> extra)
      fail(ErrorKind::parse,
           "manifest line " + std::to_string(lineno) + ": trailing tokens");
    family_from_string(spec.family);  // validated here, reported per-row later
    if (spec.method != "ixs" && spec.method != "oracle")
      fail(ErrorKind::parse, "manifest line " + std::to_string(lineno) +
                                 ": unknown method '" + spec.method + "'");
    try {
      spec.seed = std::stoull(seed_tok);
      spec.time_limit_s = std::stod(limit_tok);
    } catch (const std::exception&) {
      fail(ErrorKind::parse,
           "manifest line " + std::to_string(lineno) + ": bad seed/time limit");
    }
    specs.push_back(std::move(spec));
  }
  return specs;
}

RunRecord execute_run(const RunSpec& spec, const BatchOptions& opts) {
  RunRecord rec;
  rec.id = spec.id;
  rec.family = spec.family;
  rec.method = spec.method;

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed_ms = [&t0]() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  };

  try {
    Instance inst = Instance::load(family_from_string(spec.family), spec.path);
    if (spec.method == "ixs") {
      IxsConfig cfg;
      cfg.init = opts.init;
      cfg.rho = opts.rho;
      cfg.rng_seed = spec.seed;
      cfg.time_limit_s = spec.time_limit_s;
      auto adapter = inst.make_adapter();
      IxsResult res = run_ixs(*adapter, cfg);
      rec.status = res.status == SolveStatus::optimal ? "optimal" : "timeout";
      rec.z = res.z;
      rec.has_z = true;
      rec.iterations = res.iterations;
      rec.greedy_fraction = res.greedy_fraction;
      rec.time_ms = res.status == SolveStatus::timeout
                        ? static_cast<std::int64_t>(spec.time_limit_s * 1000.0)
                        : elapsed_ms();
    } else {
      OracleResult res = brute_force_bilevel(inst, opts.oracle_cap);
      rec.status = "optimal";
      rec.z = res.z;
      rec.has_z = true;
      rec.iterations = static_cast<std::int64_t>(res.enumerated);
      rec.time_ms = elapsed_ms();
    }
  } catch (const std::exception& e) {
    rec.status = "error";
    rec.message = e.what();
    rec.time_ms = elapsed_ms();
  }
  return rec;
}

std::vector<RunRecord> run_batch(const std::vector<RunSpec>& specs,
                                 const BatchOptions& opts) {
  std::vector<RunRecord> records(specs.size());
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    for (size_t i = 0; i < specs.size(); ++i)
      records[i] = execute_run(specs[i], opts);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= specs.size()) return;
        records[i] = execute_run(specs[i], opts);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const RunRecord& a, const RunRecord& b) {
                     if (a.id != b.id) return a.id < b.id;
                     return a.method < b.method;
                   });
  return records;
}

std::string records_to_csv(const std::vector<RunRecord>& records,
                           const BatchOptions& opts) {
  std::ostringstream out;
  out << kRunCsvHeader << "\n";
  for (const RunRecord& r : records) {
    out << r.id << "," << r.family << "," << r.method << "," << r.status << ",";
    if (r.has_z)
      out << r.z.num << "," << r.z.den;
    else
      out << ",";
    out << "," << (opts.zero_times ? 0 : r.time_ms) << "," << r.iterations;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", r.greedy_fraction);
    out << "," << buf << "\n";
  }
  return out.str();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cell);
      cell.clear();
    } else if (c != '\r') {
      cell += c;
    }
  }
  cells.push_back(cell);
  return cells;
}

}  // namespace

std::string compute_profile(const std::string& runs_csv) {
  std::istringstream in(runs_csv);
  std::string line;
  if (!std::getline(in, line) || split_csv_line(line).size() != 9)
    fail(ErrorKind::parse, "profile: bad run CSV header");

  // method -> instance id -> time in seconds
  std::map<std::string, std::map<std::string, double>> times;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cells = split_csv_line(line);
    if (cells.size() != 9) fail(ErrorKind::parse, "profile: bad CSV row");
    const std::string& id = cells[0];
    const std::string& method = cells[2];
    const std::string& status = cells[3];
    if (status == "error")
      fail(ErrorKind::invalid_argument,
           "profile: run " + id + "/" + method + " has status=error");
    double seconds = std::stod(cells[6]) / 1000.0;
    auto [it, inserted] = times[method].emplace(id, seconds);
    if (!inserted)
      fail(ErrorKind::invalid_argument,
           "profile: duplicate run for " + id + "/" + method);
  }
  if (times.empty()) fail(ErrorKind::invalid_argument, "profile: no runs");

  // All methods must cover the same instances.
  const auto& ref = times.begin()->second;
  for (const auto& [method, byid] : times) {
    if (byid.size() != ref.size())
      fail(ErrorKind::invalid_argument, "profile: mismatched instance sets");
    for (const auto& [id, t] : byid)
      if (!ref.count(id))
        fail(ErrorKind::invalid_argument, "profile: mismatched instance sets");
  }

  // Shifted ratios against the per-instance best.
  std::map<std::string, std::vector<double>> ratios;
  for (const auto& [id, t_ref] : ref) {
    double best = t_ref;
    for (const auto& [method, byid] : times) best = std::min(best, byid.at(id));
    for (const auto& [method, byid] : times)
      ratios[method].push_back((byid.at(id) + 1.0) / (best + 1.0));
  }

  std::vector<double> grid;
  for (auto& [method, rs] : ratios) {
    std::sort(rs.begin(), rs.end());
    grid.insert(grid.end(), rs.begin(), rs.end());
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::ostringstream out;
  out << "method,eta,fraction\n";
  for (const auto& [method, rs] : ratios) {
    for (double x : grid) {
      auto count = std::upper_bound(rs.begin(), rs.end(), x) - rs.begin();
      double frac = static_cast<double>(count) / static_cast<double>(rs.size());
      char eta_buf[40], frac_buf[40];
      std::snprintf(eta_buf, sizeof(eta_buf), "%.9g", x);
      std::snprintf(frac_buf, sizeof(frac_buf), "%.6f", frac);
      out << method << "," << eta_buf << "," << frac_buf << "\n";
    }
  }
  return out.str();
}

}  // namespace ixs
