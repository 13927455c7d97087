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

// Command-line front end for the ixs solver shared library. Everything goes
// through the C interface in ixs/ixs.h.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ixs/ixs.h"

namespace {

struct CliError {
  int code;
};

void check(ixs_status status, const char* what) {
  if (status == IXS_OK) return;
  std::cerr << "error: " << what << ": " << ixs_status_name(status) << ": "
            << ixs_last_error() << "\n";
  throw CliError{2};
}

ixs_family parse_family(const std::string& name) {
  if (name == "bkp") return IXS_FAMILY_BKP;
  if (name == "bcp") return IXS_FAMILY_BCP;
  if (name == "msmp") return IXS_FAMILY_MSMP;
  std::cerr << "error: unknown family '" << name << "' (bkp|bcp|msmp)\n";
  throw CliError{2};
}

int parse_init(const std::string& name) {
  if (name == "trivial") return IXS_INIT_TRIVIAL;
  if (name == "units") return IXS_INIT_UNIT_VECTORS;
  if (name == "random") return IXS_INIT_RANDOM_RHO;
  std::cerr << "error: unknown init strategy '" << name
            << "' (trivial|units|random)\n";
  throw CliError{2};
}

void save_instance(ixs_instance* inst, const std::string& path) {
  check(ixs_instance_save(inst, path.c_str()), "writing instance");
  ixs_instance_free(inst);
  std::cout << path << "\n";
}

void print_owned(char* text) {
  std::cout << text;
  ixs_string_free(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ixs: exact solver for min-max binary interdiction problems"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random instance file");
  gen->require_subcommand(1);
  struct {
    int n = 10;
    int g = 0;
    double density = 0.5;
    int degree = 4;
    double beta = 0.2;
    int h = 2;
    int k = 2;
    int scenarios = 5;
    std::uint64_t seed = 1;
    std::string out;
  } g;
  auto* gen_bkp = gen->add_subcommand("bkp", "knapsack interdiction");
  gen_bkp->add_option("--n", g.n, "item count")->required();
  gen_bkp->add_option("--g", g.g, "leader budget")->required();
  gen_bkp->add_option("--seed", g.seed, "rng seed");
  gen_bkp->add_option("--out", g.out, "output file")->required();
  auto* gen_bcp = gen->add_subcommand("bcp", "clique interdiction");
  gen_bcp->add_option("--n", g.n, "vertex count")->required();
  gen_bcp->add_option("--density", g.density, "edge probability")->required();
  gen_bcp->add_option("--g", g.g, "leader budget (0 = ceil(|E|/4))");
  gen_bcp->add_option("--seed", g.seed, "rng seed");
  gen_bcp->add_option("--out", g.out, "output file")->required();
  auto* gen_msmp = gen->add_subcommand("msmp", "misinformation spread");
  gen_msmp->add_option("--n", g.n, "node count")->required();
  gen_msmp->add_option("--degree", g.degree, "even ring-lattice degree");
  gen_msmp->add_option("--beta", g.beta, "rewiring probability");
  gen_msmp->add_option("--protect", g.h, "protection budget (h)")->required();
  gen_msmp->add_option("--seeds", g.k, "seeding budget (k)")->required();
  gen_msmp->add_option("--scenarios", g.scenarios, "live-arc scenario count");
  gen_msmp->add_option("--seed", g.seed, "rng seed");
  gen_msmp->add_option("--out", g.out, "output file")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "run the sampling solver");
  struct {
    std::string family;
    std::string instance;
    std::string init = "trivial";
    int rho = 1;
    double time_limit = 3600.0;
    std::uint64_t seed = 0;
    bool trace = false;
    bool show_time = false;
  } s;
  solve->add_option("--family", s.family, "bkp|bcp|msmp")->required();
  solve->add_option("--instance", s.instance, "instance file")->required();
  solve->add_option("--init", s.init, "trivial|units|random");
  solve->add_option("--rho", s.rho, "random initial leaders");
  solve->add_option("--time-limit", s.time_limit, "seconds");
  solve->add_option("--seed", s.seed, "rng seed");
  solve->add_flag("--trace", s.trace, "print the per-iteration trace");
  solve->add_flag("--time", s.show_time, "print wall time (non-deterministic)");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exhaustive verification solve");
  struct {
    std::string family;
    std::string instance;
    std::uint64_t cap = 0;
    bool show_time = false;
  } o;
  oracle->add_option("--family", o.family, "bkp|bcp|msmp")->required();
  oracle->add_option("--instance", o.instance, "instance file")->required();
  oracle->add_option("--cap", o.cap, "max leader vectors (0 = default)");
  oracle->add_flag("--time", o.show_time, "print wall time (non-deterministic)");

  // batch
  auto* batch = app.add_subcommand("batch", "run a manifest of solves");
  struct {
    std::string manifest;
    std::string out;
    int jobs = 1;
    bool zero_times = false;
    std::string init = "trivial";
    int rho = 1;
  } b;
  batch->add_option("--manifest", b.manifest, "manifest file")->required();
  batch->add_option("--out", b.out, "output CSV")->required();
  batch->add_option("--jobs", b.jobs, "concurrent solves");
  batch->add_flag("--zero-times", b.zero_times,
                  "write 0 in time columns (byte-stable output)");
  batch->add_option("--init", b.init, "trivial|units|random");
  batch->add_option("--rho", b.rho, "random initial leaders");

  // profile
  auto* profile = app.add_subcommand("profile", "performance profile of a batch CSV");
  struct {
    std::string runs;
    std::string out;
  } p;
  profile->add_option("--runs", p.runs, "batch CSV")->required();
  profile->add_option("--out", p.out, "output CSV")->required();

  // dump-scenarios
  auto* dump = app.add_subcommand("dump-scenarios",
                                  "materialize the live-arc scenarios of an msmp instance");
  struct {
    std::string instance;
  } d;
  dump->add_option("--instance", d.instance, "msmp instance file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen_bkp->parsed()) {
      ixs_instance* inst = nullptr;
      check(ixs_gen_bkp(g.n, g.g, g.seed, &inst), "generating instance");
      save_instance(inst, g.out);
    } else if (gen_bcp->parsed()) {
      ixs_instance* inst = nullptr;
      check(ixs_gen_bcp(g.n, g.density, g.g, g.seed, &inst), "generating instance");
      save_instance(inst, g.out);
    } else if (gen_msmp->parsed()) {
      ixs_instance* inst = nullptr;
      check(ixs_gen_msmp(g.n, g.degree, g.beta, g.h, g.k, g.scenarios, g.seed,
                         &inst),
            "generating instance");
      save_instance(inst, g.out);
    } else if (solve->parsed()) {
      ixs_instance* inst = nullptr;
      check(ixs_instance_load(parse_family(s.family), s.instance.c_str(), &inst),
            "loading instance");
      ixs_config cfg;
      ixs_config_init(&cfg);
      cfg.init = parse_init(s.init);
      cfg.rho = s.rho;
      cfg.time_limit_s = s.time_limit;
      cfg.rng_seed = s.seed;
      ixs_result* res = nullptr;
      check(ixs_solve(inst, &cfg, &res), "solving");
      char* text = nullptr;
      check(ixs_result_summary(res, &text), "formatting result");
      print_owned(text);
      if (s.trace) {
        check(ixs_result_trace(res, &text), "formatting trace");
        print_owned(text);
      }
      if (s.show_time)
        std::cout << "time_ms " << ixs_result_wall_ms(res) << "\n";
      ixs_result_free(res);
      ixs_instance_free(inst);
    } else if (oracle->parsed()) {
      ixs_instance* inst = nullptr;
      check(ixs_instance_load(parse_family(o.family), o.instance.c_str(), &inst),
            "loading instance");
      ixs_result* res = nullptr;
      check(ixs_oracle(inst, o.cap, &res), "oracle solve");
      char* text = nullptr;
      check(ixs_result_summary(res, &text), "formatting result");
      print_owned(text);
      if (o.show_time)
        std::cout << "time_ms " << ixs_result_wall_ms(res) << "\n";
      ixs_result_free(res);
      ixs_instance_free(inst);
    } else if (batch->parsed()) {
      ixs_config cfg;
      ixs_config_init(&cfg);
      cfg.init = parse_init(b.init);
      cfg.rho = b.rho;
      check(ixs_run_batch(b.manifest.c_str(), b.out.c_str(), b.jobs,
                          b.zero_times ? 1 : 0, &cfg),
            "running batch");
      std::cout << b.out << "\n";
    } else if (profile->parsed()) {
      check(ixs_compute_profile(p.runs.c_str(), p.out.c_str()),
            "computing profile");
      std::cout << p.out << "\n";
    } else if (dump->parsed()) {
      ixs_instance* inst = nullptr;
      check(ixs_instance_load(IXS_FAMILY_MSMP, d.instance.c_str(), &inst),
            "loading instance");
      char* text = nullptr;
      check(ixs_msmp_scenario_dump(inst, &text), "dumping scenarios");
      print_owned(text);
      ixs_instance_free(inst);
    }
  } catch (const CliError& e) {
    return e.code;
  }
  return 0;
}
