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

struct Arc {
  int src = 0;
  int dst = 0;
  double weight = 0.0;  // in (0, 1]
};

// Directed influence network. Incoming weights per node sum to at most one,
// so the weights double as live-arc probabilities.
struct SocialNetwork {
  int n = 0;
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> in_arcs;  // per node, arc ids by ascending id

  void build_index();
  void validate() const;
};

// Per scenario and node, the live incoming arc's source (-1 for none). Each
// node keeps at most one live in-arc, making every scenario an in-forest
// (possibly with cycles through the functional predecessor structure, which
// reachability handles).
struct ScenarioSet {
  int count = 0;
  std::vector<std::vector<int>> live_pred;  // [scenario][node] -> src or -1
};

// Diffusion interdiction: the leader protects up to h nodes, the follower
// seeds up to k unprotected nodes; the objective is the expected number of
// influenced nodes over the sampled scenarios (probability 1/R each).
//
// Text format: header "n m h k R seed", then m lines "src dst weight".
// Scenarios are regenerated from the seed, never stored.
struct MsmpInstance {
  SocialNetwork network;
  int protect_budget = 0;  // h
  int seed_budget = 0;     // k
  int scenario_count = 0;  // R
  std::uint64_t seed = 0;

  void validate() const;
  static MsmpInstance parse(const std::string& text);
  std::string to_text() const;
};

// Watts-Strogatz small world: ring lattice of even degree K, each clockwise
// edge rewired with probability beta; every undirected edge becomes two
// opposing arcs. Arc weights are uniform (0,1) draws scaled down per target
// node whenever the incoming sum exceeds one.
SocialNetwork gen_watts_strogatz(int n, int mean_degree, double beta,
                                 std::uint64_t seed);

MsmpInstance gen_msmp(int n, int mean_degree, double beta, int protect_budget,
                      int seed_budget, int scenario_count, std::uint64_t seed);

// Latin-hypercube live-arc sampling: per node, the unit interval is split
// into one sub-interval per incoming arc (lengths = weights, in arc-id order)
// plus a no-arc remainder; each node independently receives one stratified
// uniform per scenario (strata permuted across scenarios).
ScenarioSet sample_scenarios_lhs(const SocialNetwork& net, int count,
                                 std::uint64_t seed);

// Scenarios for an instance, derived deterministically from its seed.
ScenarioSet instance_scenarios(const MsmpInstance& inst);

std::string format_scenarios(const ScenarioSet& scen, int n);

// Reachable sets via live arcs with protected nodes removed: reach[r][j] is
// the bitmask of nodes influenced when j seeds scenario r (empty for
// protected j). Masks are word-arrays to allow any n.
using NodeMask = std::vector<std::uint64_t>;
std::vector<std::vector<NodeMask>> reach_sets(const MsmpInstance& inst,
                                              const ScenarioSet& scen,
                                              const LeaderVector& w);

class MsmpAdapter : public ProblemAdapter {
 public:
  explicit MsmpAdapter(MsmpInstance inst);

  std::string family() const override { return "msmp"; }
  std::string payload_kind() const override { return "seeds"; }
  int leader_count() const override { return inst_.network.n; }
  int leader_budget() const override { return inst_.protect_budget; }
  Rat trivial_value() const override { return Rat(0); }

  // Exact best seed set (branch-and-bound over seed combinations with a
  // marginal-gain bound); value is influenced-node count over R, and the
  // blocker set is every node influenced in any scenario.
  FollowerSample best_response(const LeaderVector& w) const override;

  // Replays a sampled solution under a different leader decision: feasible
  // iff the seeds stay unprotected and every originally influenced node is
  // still reachable from the seed set. Used to cross-check the blocker-set
  // classification.
  bool replay_feasible(const FollowerSample& sample, const LeaderVector& w) const;

  const MsmpInstance& instance() const { return inst_; }
  const ScenarioSet& scenarios() const { return scenarios_; }

 private:
  MsmpInstance inst_;
  ScenarioSet scenarios_;
};

}  // namespace ixs
