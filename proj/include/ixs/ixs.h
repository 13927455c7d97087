/* Copyright 2026 The ixs Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the ixs solver library.
 *
 * All functions return an ixs_status; every non-OK return leaves a
 * human-readable message retrievable with ixs_last_error() (thread-local).
 * Objects are opaque handles released with their _free function. Strings
 * returned through char** are heap-allocated and released with
 * ixs_string_free().
 */

#ifndef IXS_IXS_H_
#define IXS_IXS_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ixs_status {
  IXS_OK = 0,
  IXS_ERR_INVALID_ARGUMENT = 1,
  IXS_ERR_PARSE = 2,
  IXS_ERR_IO = 3,
  IXS_ERR_TOO_LARGE = 4,
  IXS_ERR_INTERNAL = 5
} ixs_status;

typedef enum ixs_family {
  IXS_FAMILY_BKP = 0,  /* knapsack interdiction */
  IXS_FAMILY_BCP = 1,  /* clique interdiction (edge removal) */
  IXS_FAMILY_MSMP = 2  /* misinformation-spread minimization */
} ixs_family;

typedef enum ixs_init_strategy {
  IXS_INIT_TRIVIAL = 0,      /* trivial solution + response to w = 0 */
  IXS_INIT_UNIT_VECTORS = 1, /* additionally one response per unit leader */
  IXS_INIT_RANDOM_RHO = 2    /* additionally rho random full-budget leaders */
} ixs_init_strategy;

typedef enum ixs_solve_status {
  IXS_SOLVE_OPTIMAL = 0,
  IXS_SOLVE_TIMEOUT = 1
} ixs_solve_status;

typedef struct ixs_instance ixs_instance;
typedef struct ixs_result ixs_result;

typedef struct ixs_config {
  int init;            /* ixs_init_strategy */
  int rho;             /* random leaders for IXS_INIT_RANDOM_RHO, >= 1 */
  double time_limit_s; /* wall-clock limit, > 0 */
  uint64_t rng_seed;
} ixs_config;

const char* ixs_status_name(ixs_status status);
const char* ixs_last_error(void);
void ixs_string_free(char* s);
void ixs_config_init(ixs_config* cfg);

/* -- Instances ---------------------------------------------------------- */

ixs_status ixs_instance_parse(ixs_family family, const char* text,
                              ixs_instance** out);
ixs_status ixs_instance_load(ixs_family family, const char* path,
                             ixs_instance** out);
ixs_status ixs_instance_save(const ixs_instance* inst, const char* path);
ixs_status ixs_instance_text(const ixs_instance* inst, char** out_text);
void ixs_instance_free(ixs_instance* inst);

int ixs_instance_family(const ixs_instance* inst);
int ixs_instance_leader_count(const ixs_instance* inst);
int ixs_instance_leader_budget(const ixs_instance* inst);

/* Deterministic generators (fixed SplitMix64 streams). A budget of 0 for
 * ixs_gen_bcp selects the default ceil(|E|/4). */
ixs_status ixs_gen_bkp(int n, int budget, uint64_t seed, ixs_instance** out);
ixs_status ixs_gen_bcp(int n, double density, int budget, uint64_t seed,
                       ixs_instance** out);
ixs_status ixs_gen_msmp(int n, int mean_degree, double beta, int protect_budget,
                        int seed_budget, int scenarios, uint64_t seed,
                        ixs_instance** out);

/* Live-arc scenarios of an MSMP instance, regenerated from its seed. */
ixs_status ixs_msmp_scenario_dump(const ixs_instance* inst, char** out_text);

/* -- Solving ------------------------------------------------------------ */

/* Sampling solver; cfg == NULL uses the defaults from ixs_config_init. */
ixs_status ixs_solve(const ixs_instance* inst, const ixs_config* cfg,
                     ixs_result** out);

/* Exhaustive leader enumeration with exact follower solves; fails with
 * IXS_ERR_TOO_LARGE when the leader space exceeds leader_cap (0 selects a
 * per-family default). */
ixs_status ixs_oracle(const ixs_instance* inst, uint64_t leader_cap,
                      ixs_result** out);

void ixs_result_free(ixs_result* res);

int ixs_result_status(const ixs_result* res); /* ixs_solve_status */
void ixs_result_objective(const ixs_result* res, int64_t* num, int64_t* den);
void ixs_result_lower_bound(const ixs_result* res, int64_t* num, int64_t* den);
int64_t ixs_result_iterations(const ixs_result* res);
double ixs_result_greedy_fraction(const ixs_result* res);
int64_t ixs_result_wall_ms(const ixs_result* res);

int ixs_result_leader_size(const ixs_result* res);
ixs_status ixs_result_leader(const ixs_result* res, int* indices, int size);

/* Deterministic reports: the summary covers status/objective/leader/follower,
 * the trace one line per iteration. Neither contains wall-clock times. */
ixs_status ixs_result_summary(const ixs_result* res, char** out_text);
ixs_status ixs_result_trace(const ixs_result* res, char** out_text);

/* -- Batch harness ------------------------------------------------------ */

/* Executes a run manifest ("id family path method seed time_limit_s" per
 * line, '#' comments, method ixs|oracle) and writes one CSV row per run,
 * sorted by (id, method). jobs > 1 solves independent runs concurrently;
 * zero_times != 0 writes 0 in the time column for byte-stable output. cfg
 * supplies init strategy/rho/oracle defaults for every run (NULL = defaults).
 */
ixs_status ixs_run_batch(const char* manifest_path, const char* out_csv_path,
                         int jobs, int zero_times, const ixs_config* cfg);

/* Performance profile of a batch CSV: cumulative distribution of shifted
 * time ratios per method, written as "method,eta,fraction" rows. */
ixs_status ixs_compute_profile(const char* runs_csv_path,
                               const char* out_csv_path);

#ifdef __cplusplus
}
#endif

#endif /* IXS_IXS_H_ */
