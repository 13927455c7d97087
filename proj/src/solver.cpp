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

#include <chrono>
#include <sstream>

#include "core.hpp"
#include "cover.hpp"
#include "rng.hpp"
#include "util.hpp"

namespace ixs {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
      .count();
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

FollowerSample respond(const ProblemAdapter& adapter, const LeaderVector& w) {
  FollowerSample s = adapter.best_response(w);
  s.origin = w;
  std::sort(s.blockers.begin(), s.blockers.end());
  std::sort(s.selection.begin(), s.selection.end());
  return s;
}

// Outcome of one lower-bound step. The leader witness is the cover solution's
// selection padded into a leader vector; `used_exact` distinguishes the
// greedy fast path from the exact fallback.
struct LbStep {
  Rat value;
  LeaderVector leader;
  bool used_exact = false;
};

LbStep lower_bound_step(const ProblemAdapter& adapter, const SamplePool& pool) {
  const Rat& z0 = pool.z0();
  const Rat& zbar = pool.zbar();

  std::vector<CoverSet> sets;
  sets.reserve(pool.samples().size());
  bool unblockable_at_bound = false;
  for (const FollowerSample& s : pool.samples()) {
    if (s.id == 0) continue;
    if (s.blockers.empty()) {
      // A sample no leader can block pins the optimum: it is feasible under
      // every leader yet follower-optimal for one, so it sits exactly at the
      // upper bound and the lower bound cannot pass it.
      if (z0 < s.value) {
        IXS_CHECK(s.value == zbar,
                  "unblockable sample strictly between z0 and the upper bound");
        unblockable_at_bound = true;
      }
      continue;
    }
    bool mandatory = zbar < s.value;
    sets.push_back(CoverSet{s.blockers, s.value, mandatory});
  }

  if (unblockable_at_bound)
    return LbStep{zbar, pool.incumbent(), false};

  CoverProblem problem(adapter.leader_count(), std::move(sets),
                       adapter.leader_budget(), z0, zbar);

  CoverSolution sol = greedy_cover(problem);
  bool used_exact = false;
  if (!sol.full_cover) {
    sol = exact_lb(problem);
    used_exact = true;
  }

  LeaderVector w = adapter.empty_leader();
  w.support = sol.chosen;
  w.validate();
  return LbStep{sol.bound, std::move(w), used_exact};
}

}  // namespace

SamplePool init_pool(const ProblemAdapter& adapter, const IxsConfig& cfg) {
  cfg.validate();

  // The trivial solution: empty selection, feasible under every leader.
  FollowerSample trivial;
  trivial.value = adapter.trivial_value();
  trivial.kind = adapter.payload_kind();
  trivial.origin = adapter.empty_leader();
  SamplePool pool(adapter.trivial_value(), std::move(trivial));

  std::vector<LeaderVector> initial;
  initial.push_back(adapter.empty_leader());  // w = 0 is always sampled
  switch (cfg.init) {
    case InitStrategy::trivial_only:
      break;
    case InitStrategy::unit_vectors:
      if (adapter.leader_budget() >= 1)
        for (int i = 0; i < adapter.leader_count(); ++i)
          initial.push_back(adapter.make_leader({i}));
      break;
    case InitStrategy::random_rho: {
      SplitMix64 rng(cfg.rng_seed);
      int g = adapter.leader_budget();
      for (int r = 0; r < cfg.rho; ++r)
        initial.push_back(
            adapter.make_leader(rng.next_subset(adapter.leader_count(), g)));
      break;
    }
  }

  for (const LeaderVector& w : initial) {
    try {
      pool.add(respond(adapter, w));
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      fail(ErrorKind::internal, "follower oracle failed for leader " + w.str() +
                                    ": " + e.what());
    }
  }
  return pool;
}

IxsResult run_ixs(const ProblemAdapter& adapter, const IxsConfig& cfg) {
  const auto t0 = Clock::now();
  SamplePool pool = init_pool(adapter, cfg);

  IxsResult res;
  res.z0 = pool.z0();
  res.zbar_initial = pool.zbar();

  int greedy_hits = 0;
  for (;;) {
    if (seconds_since(t0) > cfg.time_limit_s) {
      res.status = SolveStatus::timeout;
      break;
    }
    ++res.iterations;

    const auto lb_t0 = Clock::now();
    LbStep lb = lower_bound_step(adapter, pool);
    const std::int64_t lb_ms = ms_since(lb_t0);
    IXS_CHECK(lb.value == pool.z0() || lb.value == pool.zbar(),
              "lower bound is neither z0 nor the current upper bound");

    const auto ub_t0 = Clock::now();
    FollowerSample response = respond(adapter, lb.leader);
    const std::int64_t ub_ms = ms_since(ub_t0);

    TraceEntry entry;
    entry.lb = lb.value;
    entry.ub = response.value;
    entry.greedy_hit = !lb.used_exact;
    entry.lb_ms = lb_ms;
    entry.ub_ms = ub_ms;
    if (entry.greedy_hit) ++greedy_hits;

    // Expanding the pool also performs the upper-bound update: a response
    // below zbar lowers it and promotes its leader to incumbent.
    entry.duplicate = pool.add(std::move(response));
    entry.zbar_after = pool.zbar();
    res.trace.push_back(entry);

    if (!(lb.value < pool.zbar())) break;  // bounds met: lb == zbar

    IXS_CHECK(!entry.duplicate,
              "follower re-issued a sampled solution while bounds were open");
  }

  res.lower_bound =
      res.status == SolveStatus::optimal && !res.trace.empty()
          ? res.trace.back().lb
          : pool.z0();
  res.z = pool.zbar();
  res.leader = pool.incumbent();
  res.follower_selection = pool.incumbent_sample().selection;
  res.follower_kind = pool.incumbent_sample().kind;
  res.greedy_fraction =
      res.iterations > 0 ? static_cast<double>(greedy_hits) / res.iterations : 0.0;
  res.wall_ms = ms_since(t0);

  if (res.status == SolveStatus::optimal)
    IXS_CHECK(res.lower_bound == res.z, "terminated with open bounds");
  return res;
}

std::string IxsResult::trace_text() const {
  std::ostringstream out;
  out << "z0 " << z0.str() << "\n";
  out << "zbar0 " << zbar_initial.str() << "\n";
  for (size_t q = 0; q < trace.size(); ++q) {
    const TraceEntry& e = trace[q];
    out << "iter " << (q + 1) << " lb " << e.lb.str() << " ub " << e.ub.str()
        << " zbar " << e.zbar_after.str() << " greedy " << (e.greedy_hit ? 1 : 0)
        << " dup " << (e.duplicate ? 1 : 0) << "\n";
  }
  return out.str();
}

std::string IxsResult::summary_text() const {
  std::ostringstream out;
  out << "status " << (status == SolveStatus::optimal ? "optimal" : "timeout")
      << "\n";
  if (status == SolveStatus::optimal) {
    out << "z " << z.str() << "\n";
  } else {
    out << "zbar " << z.str() << "\n";
    out << "lb " << lower_bound.str() << "\n";
  }
  out << "w";
  for (int i : leader.support) out << " " << i;
  out << "\n";
  out << "x " << follower_kind;
  for (int i : follower_selection) out << " " << i;
  out << "\n";
  out << "iters " << iterations << "\n";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", greedy_fraction);
  out << "greedy_frac " << buf << "\n";
  return out.str();
}

}  // namespace ixs
