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

#include "ixs/ixs.h"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <string>

#include "harness.hpp"
#include "instance.hpp"
#include "oracle.hpp"
#include "util.hpp"

struct ixs_instance {
  ixs::Instance data;
};

struct ixs_result {
  ixs::IxsResult data;
  bool from_oracle = false;
};

namespace {

thread_local std::string g_last_error;

ixs_status status_of(ixs::ErrorKind kind) {
  switch (kind) {
    case ixs::ErrorKind::invalid_argument: return IXS_ERR_INVALID_ARGUMENT;
    case ixs::ErrorKind::parse: return IXS_ERR_PARSE;
    case ixs::ErrorKind::io: return IXS_ERR_IO;
    case ixs::ErrorKind::too_large: return IXS_ERR_TOO_LARGE;
    case ixs::ErrorKind::internal: return IXS_ERR_INTERNAL;
  }
  return IXS_ERR_INTERNAL;
}

template <typename Fn>
ixs_status guarded(Fn&& fn) {
  try {
    fn();
    return IXS_OK;
  } catch (const ixs::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return IXS_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return IXS_ERR_INTERNAL;
  }
}

ixs_status require(bool cond, const char* what) {
  if (cond) return IXS_OK;
  g_last_error = std::string("null or invalid argument: ") + what;
  return IXS_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ixs::Family to_family(int family) {
  switch (family) {
    case IXS_FAMILY_BKP: return ixs::Family::bkp;
    case IXS_FAMILY_BCP: return ixs::Family::bcp;
    case IXS_FAMILY_MSMP: return ixs::Family::msmp;
    default:
      ixs::fail(ixs::ErrorKind::invalid_argument,
                "unknown family code " + std::to_string(family));
  }
}

int from_family(ixs::Family f) {
  switch (f) {
    case ixs::Family::bkp: return IXS_FAMILY_BKP;
    case ixs::Family::bcp: return IXS_FAMILY_BCP;
    case ixs::Family::msmp: return IXS_FAMILY_MSMP;
  }
  return IXS_FAMILY_BKP;
}

ixs::IxsConfig to_config(const ixs_config* cfg) {
  ixs::IxsConfig out;
  if (!cfg) return out;
  switch (cfg->init) {
    case IXS_INIT_TRIVIAL: out.init = ixs::InitStrategy::trivial_only; break;
    case IXS_INIT_UNIT_VECTORS: out.init = ixs::InitStrategy::unit_vectors; break;
    case IXS_INIT_RANDOM_RHO: out.init = ixs::InitStrategy::random_rho; break;
    default:
      ixs::fail(ixs::ErrorKind::invalid_argument, "unknown init strategy");
  }
  out.rho = cfg->rho;
  out.time_limit_s = cfg->time_limit_s;
  out.rng_seed = cfg->rng_seed;
  return out;
}

}  // namespace

extern "C" {

const char* ixs_status_name(ixs_status status) {
  switch (status) {
    case IXS_OK: return "ok";
    case IXS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case IXS_ERR_PARSE: return "parse error";
    case IXS_ERR_IO: return "io error";
    case IXS_ERR_TOO_LARGE: return "too large";
    case IXS_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* ixs_last_error(void) { return g_last_error.c_str(); }

void ixs_string_free(char* s) { delete[] s; }

void ixs_config_init(ixs_config* cfg) {
  if (!cfg) return;
  cfg->init = IXS_INIT_TRIVIAL;
  cfg->rho = 1;
  cfg->time_limit_s = 3600.0;
  cfg->rng_seed = 0;
}

ixs_status ixs_instance_parse(ixs_family family, const char* text,
                              ixs_instance** out) {
  if (auto s = require(text && out, "ixs_instance_parse")) return s;
  return guarded([&] {
    *out = new ixs_instance{ixs::Instance::parse(to_family(family), text)};
  });
}

ixs_status ixs_instance_load(ixs_family family, const char* path,
                             ixs_instance** out) {
  if (auto s = require(path && out, "ixs_instance_load")) return s;
  return guarded([&] {
    *out = new ixs_instance{ixs::Instance::load(to_family(family), path)};
  });
}

ixs_status ixs_instance_save(const ixs_instance* inst, const char* path) {
  if (auto s = require(inst && path, "ixs_instance_save")) return s;
  return guarded([&] { ixs::write_text_file(path, inst->data.to_text()); });
}

ixs_status ixs_instance_text(const ixs_instance* inst, char** out_text) {
  if (auto s = require(inst && out_text, "ixs_instance_text")) return s;
  return guarded([&] { *out_text = dup_string(inst->data.to_text()); });
}

void ixs_instance_free(ixs_instance* inst) { delete inst; }

int ixs_instance_family(const ixs_instance* inst) {
  return inst ? from_family(inst->data.family) : -1;
}

int ixs_instance_leader_count(const ixs_instance* inst) {
  if (!inst) return -1;
  return inst->data.make_adapter()->leader_count();
}

int ixs_instance_leader_budget(const ixs_instance* inst) {
  if (!inst) return -1;
  return inst->data.make_adapter()->leader_budget();
}

ixs_status ixs_gen_bkp(int n, int budget, uint64_t seed, ixs_instance** out) {
  if (auto s = require(out != nullptr, "ixs_gen_bkp")) return s;
  return guarded([&] {
    ixs::Instance inst;
    inst.family = ixs::Family::bkp;
    inst.data = ixs::gen_bkp(n, budget, seed);
    *out = new ixs_instance{std::move(inst)};
  });
}

ixs_status ixs_gen_bcp(int n, double density, int budget, uint64_t seed,
                       ixs_instance** out) {
  if (auto s = require(out != nullptr, "ixs_gen_bcp")) return s;
  return guarded([&] {
    ixs::Instance inst;
    inst.family = ixs::Family::bcp;
    inst.data = ixs::gen_bcp(n, density, budget, seed);
    *out = new ixs_instance{std::move(inst)};
  });
}

ixs_status ixs_gen_msmp(int n, int mean_degree, double beta, int protect_budget,
                        int seed_budget, int scenarios, uint64_t seed,
                        ixs_instance** out) {
  if (auto s = require(out != nullptr, "ixs_gen_msmp")) return s;
  return guarded([&] {
    ixs::Instance inst;
    inst.family = ixs::Family::msmp;
    inst.data = ixs::gen_msmp(n, mean_degree, beta, protect_budget, seed_budget,
                              scenarios, seed);
    *out = new ixs_instance{std::move(inst)};
  });
}

ixs_status ixs_msmp_scenario_dump(const ixs_instance* inst, char** out_text) {
  if (auto s = require(inst && out_text, "ixs_msmp_scenario_dump")) return s;
  return guarded([&] {
    if (inst->data.family != ixs::Family::msmp)
      ixs::fail(ixs::ErrorKind::invalid_argument,
                "scenario dump requires an msmp instance");
    const auto& data = std::get<ixs::MsmpInstance>(inst->data.data);
    *out_text = dup_string(
        ixs::format_scenarios(ixs::instance_scenarios(data), data.network.n));
  });
}

ixs_status ixs_solve(const ixs_instance* inst, const ixs_config* cfg,
                     ixs_result** out) {
  if (auto s = require(inst && out, "ixs_solve")) return s;
  return guarded([&] {
    auto adapter = inst->data.make_adapter();
    *out = new ixs_result{ixs::run_ixs(*adapter, to_config(cfg)), false};
  });
}

ixs_status ixs_oracle(const ixs_instance* inst, uint64_t leader_cap,
                      ixs_result** out) {
  if (auto s = require(inst && out, "ixs_oracle")) return s;
  return guarded([&] {
    const auto t0 = std::chrono::steady_clock::now();
    ixs::OracleResult oracle = ixs::brute_force_bilevel(inst->data, leader_cap);
    ixs::IxsResult res;
    res.status = ixs::SolveStatus::optimal;
    res.z = oracle.z;
    res.lower_bound = oracle.z;
    res.z0 = oracle.z;
    res.zbar_initial = oracle.z;
    res.leader = oracle.leader;
    res.follower_selection = oracle.response.selection;
    res.follower_kind = oracle.response.kind;
    res.iterations =
        static_cast<int>(std::min<uint64_t>(oracle.enumerated, 0x7FFFFFFF));
    res.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    *out = new ixs_result{std::move(res), true};
  });
}

void ixs_result_free(ixs_result* res) { delete res; }

int ixs_result_status(const ixs_result* res) {
  if (!res) return -1;
  return res->data.status == ixs::SolveStatus::optimal ? IXS_SOLVE_OPTIMAL
                                                       : IXS_SOLVE_TIMEOUT;
}

void ixs_result_objective(const ixs_result* res, int64_t* num, int64_t* den) {
  if (!res) return;
  if (num) *num = res->data.z.num;
  if (den) *den = res->data.z.den;
}

void ixs_result_lower_bound(const ixs_result* res, int64_t* num, int64_t* den) {
  if (!res) return;
  if (num) *num = res->data.lower_bound.num;
  if (den) *den = res->data.lower_bound.den;
}

int64_t ixs_result_iterations(const ixs_result* res) {
  return res ? res->data.iterations : -1;
}

double ixs_result_greedy_fraction(const ixs_result* res) {
  return res ? res->data.greedy_fraction : 0.0;
}

int64_t ixs_result_wall_ms(const ixs_result* res) {
  return res ? res->data.wall_ms : -1;
}

int ixs_result_leader_size(const ixs_result* res) {
  return res ? static_cast<int>(res->data.leader.support.size()) : -1;
}

ixs_status ixs_result_leader(const ixs_result* res, int* indices, int size) {
  if (auto s = require(res && indices, "ixs_result_leader")) return s;
  if (size < static_cast<int>(res->data.leader.support.size())) {
    g_last_error = "leader buffer too small";
    return IXS_ERR_INVALID_ARGUMENT;
  }
  for (size_t i = 0; i < res->data.leader.support.size(); ++i)
    indices[i] = res->data.leader.support[i];
  return IXS_OK;
}

ixs_status ixs_result_summary(const ixs_result* res, char** out_text) {
  if (auto s = require(res && out_text, "ixs_result_summary")) return s;
  return guarded([&] { *out_text = dup_string(res->data.summary_text()); });
}

ixs_status ixs_result_trace(const ixs_result* res, char** out_text) {
  if (auto s = require(res && out_text, "ixs_result_trace")) return s;
  return guarded([&] {
    *out_text = dup_string(res->from_oracle ? std::string()
                                            : res->data.trace_text());
  });
}

ixs_status ixs_run_batch(const char* manifest_path, const char* out_csv_path,
                         int jobs, int zero_times, const ixs_config* cfg) {
  if (auto s = require(manifest_path && out_csv_path, "ixs_run_batch")) return s;
  return guarded([&] {
    ixs::BatchOptions opts;
    opts.jobs = jobs;
    opts.zero_times = zero_times != 0;
    ixs::IxsConfig base = to_config(cfg);
    opts.init = base.init;
    opts.rho = base.rho;
    auto specs = ixs::parse_manifest(ixs::read_text_file(manifest_path));
    auto records = ixs::run_batch(specs, opts);
    ixs::write_text_file(out_csv_path, ixs::records_to_csv(records, opts));
  });
}

ixs_status ixs_compute_profile(const char* runs_csv_path,
                               const char* out_csv_path) {
  if (auto s = require(runs_csv_path && out_csv_path, "ixs_compute_profile"))
    return s;
  return guarded([&] {
    ixs::write_text_file(out_csv_path,
                         ixs::compute_profile(ixs::read_text_file(runs_csv_path)));
  });
}

}  // extern "C"
