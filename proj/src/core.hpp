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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace ixs {

// Leader decision: a set of at most `budget` interdicted indices out of
// [0, n). Indices are items (knapsack), edges (clique) or nodes (diffusion).
struct LeaderVector {
  int n = 0;
  int budget = 0;
  std::vector<int> support;  // sorted, distinct

  bool contains(int i) const {
    return std::binary_search(support.begin(), support.end(), i);
  }
  void validate() const;
  std::string str() const;  // "{0,3}" style, deterministic
};

// Bitstring order on leader vectors (component-wise, index 0 first); used for
// deterministic tie-breaking between equal-value leaders.
bool leader_lex_less(const LeaderVector& a, const LeaderVector& b);

// One sampled follower solution: its value, the leader indices any one of
// which blocks it, the leader decision it answered, and the family-specific
// selection (items / clique vertices / seed nodes).
struct FollowerSample {
  int id = 0;  // 0 is reserved for the trivial, unblockable solution
  Rat value;
  std::vector<int> blockers;   // sorted C_tau
  LeaderVector origin;
  std::vector<int> selection;  // sorted primary payload
  // Per-scenario influenced nodes for diffusion samples; identical seed sets
  // under different leaders are different follower solutions, so this is
  // part of the sample's identity. Empty for the other families.
  std::vector<std::vector<int>> detail;
  std::string kind;            // payload label, e.g. "items", "clique", "seeds"

  bool blocked_by(const LeaderVector& w) const;
  bool same_solution(const FollowerSample& other) const {
    return kind == other.kind && selection == other.selection &&
           detail == other.detail;
  }
};

// The per-family contract consumed by the solver: an exact best-response
// oracle plus the problem dimensions. Implementations must be deterministic
// (ties broken by a fixed rule) and side-effect free.
class ProblemAdapter {
 public:
  virtual ~ProblemAdapter() = default;

  virtual std::string family() const = 0;
  virtual std::string payload_kind() const = 0;  // "items", "clique", "seeds"
  virtual int leader_count() const = 0;
  virtual int leader_budget() const = 0;
  virtual Rat trivial_value() const = 0;

  // Exact follower optimum under leader decision `w`; fills value, blockers
  // and selection. `id` and `origin` are assigned by the pool.
  virtual FollowerSample best_response(const LeaderVector& w) const = 0;

  LeaderVector empty_leader() const {
    return LeaderVector{leader_count(), leader_budget(), {}};
  }
  LeaderVector make_leader(std::vector<int> support) const;
};

// The growing collection of follower solutions with the bookkeeping the
// algorithm needs: the running upper bound (minimum non-trivial sample
// value), the incumbent leader achieving it, and the index set of samples
// that exceed the bound and therefore must be blocked.
class SamplePool {
 public:
  SamplePool(Rat z0, FollowerSample trivial);

  // Appends a sample, reassigning its id, and reclassifies: a value below the
  // current upper bound lowers the bound and promotes the sample's origin to
  // incumbent. Returns true if the selection duplicates an existing sample.
  bool add(FollowerSample sample);

  const std::vector<FollowerSample>& samples() const { return samples_; }
  const Rat& z0() const { return z0_; }
  bool has_bound() const { return zbar_.has_value(); }
  const Rat& zbar() const;
  const LeaderVector& incumbent() const;
  const FollowerSample& incumbent_sample() const;
  const std::vector<int>& must_block() const { return must_block_; }

  // Largest sample value not blocked by `w`; the trivial solution is never
  // blocked so the maximum always exists.
  Rat lb_value_given_w(const LeaderVector& w) const;

  // Internal-consistency assertions (bound is the min, must-block exact,
  // incumbent blocks every must-block sample). Cheap; run after every add.
  void check_invariants() const;

 private:
  std::vector<FollowerSample> samples_;
  Rat z0_;
  std::optional<Rat> zbar_;
  int incumbent_id_ = -1;
  std::vector<int> must_block_;
};

enum class InitStrategy { trivial_only, unit_vectors, random_rho };

struct IxsConfig {
  InitStrategy init = InitStrategy::trivial_only;
  int rho = 1;                    // extra random leaders for random_rho
  double time_limit_s = 3600.0;
  std::uint64_t rng_seed = 0;

  void validate() const;
};

enum class SolveStatus { optimal, timeout };

struct TraceEntry {
  Rat lb;              // l_q, always z0 or the pre-iteration upper bound
  Rat ub;              // u_q, follower optimum at this iteration's leader
  Rat zbar_after;      // upper bound after the iteration
  bool greedy_hit;     // lower bound resolved without the exact solve
  bool duplicate;      // follower reproduced an already-sampled selection
  std::int64_t lb_ms;
  std::int64_t ub_ms;
};

struct IxsResult {
  SolveStatus status = SolveStatus::optimal;
  Rat z;                        // optimal value, or best upper bound on timeout
  Rat lower_bound;              // final l_q (equals z when optimal)
  LeaderVector leader;
  std::vector<int> follower_selection;
  std::string follower_kind;
  Rat z0;
  Rat zbar_initial;
  int iterations = 0;
  double greedy_fraction = 0.0;
  std::vector<TraceEntry> trace;
  std::int64_t wall_ms = 0;

  // Canonical trace text: deterministic for a fixed (instance, config, seed);
  // wall-clock fields are deliberately excluded.
  std::string trace_text() const;
  std::string summary_text() const;
};

// Step 0 of the algorithm: the trivial solution plus exact responses to the
// initial leaders selected by the strategy (always including w = 0).
SamplePool init_pool(const ProblemAdapter& adapter, const IxsConfig& cfg);

// The full solve: alternate greedy-first/exact-fallback lower bounds with
// exact follower responses, expanding the pool until the bounds meet.
IxsResult run_ixs(const ProblemAdapter& adapter, const IxsConfig& cfg);

}  // namespace ixs
