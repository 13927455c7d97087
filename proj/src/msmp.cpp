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

#include "msmp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <sstream>

#include "rng.hpp"
#include "util.hpp"

namespace ixs {

namespace {

int mask_words(int n) { return (n + 63) / 64; }

void mask_set(NodeMask& m, int i) { m[i / 64] |= 1ULL << (i % 64); }

bool mask_test(const NodeMask& m, int i) {
  return (m[i / 64] >> (i % 64)) & 1;
}

void mask_or(NodeMask& a, const NodeMask& b) {
  for (size_t w = 0; w < a.size(); ++w) a[w] |= b[w];
}

int mask_count_new(const NodeMask& base, const NodeMask& add) {
  int c = 0;
  for (size_t w = 0; w < base.size(); ++w)
    c += std::popcount(add[w] & ~base[w]);
  return c;
}

int mask_count(const NodeMask& m) {
  int c = 0;
  for (std::uint64_t w : m) c += std::popcount(w);
  return c;
}

}  // namespace

void SocialNetwork::build_index() {
  in_arcs.assign(n, {});
  for (int a = 0; a < static_cast<int>(arcs.size()); ++a)
    in_arcs[arcs[a].dst].push_back(a);
}

void SocialNetwork::validate() const {
  if (n < 1) fail(ErrorKind::invalid_argument, "msmp: need at least one node");
  std::set<std::pair<int, int>> seen;
  std::vector<double> in_sum(n, 0.0);
  for (const Arc& a : arcs) {
    if (a.src < 0 || a.src >= n || a.dst < 0 || a.dst >= n)
      fail(ErrorKind::invalid_argument, "msmp: arc endpoint out of range");
    if (a.src == a.dst) fail(ErrorKind::invalid_argument, "msmp: self-arc");
    if (!(a.weight > 0.0 && a.weight <= 1.0))
      fail(ErrorKind::invalid_argument, "msmp: arc weight outside (0, 1]");
    if (!seen.emplace(a.src, a.dst).second)
      fail(ErrorKind::invalid_argument, "msmp: duplicate arc");
    in_sum[a.dst] += a.weight;
  }
  for (int j = 0; j < n; ++j)
    if (in_sum[j] > 1.0 + 1e-9)
      fail(ErrorKind::invalid_argument,
           "msmp: incoming weights of node " + std::to_string(j) + " exceed 1");
}

void MsmpInstance::validate() const {
  network.validate();
  if (protect_budget < 0 || protect_budget > network.n)
    fail(ErrorKind::invalid_argument, "msmp: h outside [0, n]");
  if (seed_budget < 0 || seed_budget > network.n)
    fail(ErrorKind::invalid_argument, "msmp: k outside [0, n]");
  if (scenario_count < 1)
    fail(ErrorKind::invalid_argument, "msmp: need at least one scenario");
}

MsmpInstance MsmpInstance::parse(const std::string& text) {
  TokenReader r(text, "msmp instance");
  MsmpInstance inst;
  inst.network.n = static_cast<int>(r.next_int("n"));
  int m = static_cast<int>(r.next_int("m"));
  inst.protect_budget = static_cast<int>(r.next_int("h"));
  inst.seed_budget = static_cast<int>(r.next_int("k"));
  inst.scenario_count = static_cast<int>(r.next_int("R"));
  inst.seed = r.next_uint64("seed");
  if (m < 0) fail(ErrorKind::parse, "msmp: negative arc count");
  for (int a = 0; a < m; ++a) {
    Arc arc;
    arc.src = static_cast<int>(r.next_int("arc src"));
    arc.dst = static_cast<int>(r.next_int("arc dst"));
    arc.weight = r.next_double("arc weight");
    inst.network.arcs.push_back(arc);
  }
  r.expect_done();
  inst.network.build_index();
  inst.validate();
  return inst;
}

std::string MsmpInstance::to_text() const {
  std::ostringstream out;
  out << network.n << " " << network.arcs.size() << " " << protect_budget << " "
      << seed_budget << " " << scenario_count << " " << seed << "\n";
  for (const Arc& a : network.arcs)
    out << a.src << " " << a.dst << " " << format_double(a.weight) << "\n";
  return out.str();
}

SocialNetwork gen_watts_strogatz(int n, int mean_degree, double beta,
                                 std::uint64_t seed) {
  if (n < 1) fail(ErrorKind::invalid_argument, "watts-strogatz: n must be >= 1");
  if (mean_degree < 0 || mean_degree % 2 != 0 || mean_degree >= n)
    fail(ErrorKind::invalid_argument,
         "watts-strogatz: mean degree must be even and below n");
  if (beta < 0.0 || beta > 1.0)
    fail(ErrorKind::invalid_argument, "watts-strogatz: beta outside [0, 1]");

  SplitMix64 rng(derive_stream(seed, kStreamGraph));

  // Ring lattice: node i connects to its K/2 clockwise neighbours; rewiring
  // replaces the far endpoint with a uniform non-neighbour.
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> edge_set;
  auto key = [](int u, int v) { return std::make_pair(std::min(u, v), std::max(u, v)); };
  for (int d = 1; d <= mean_degree / 2; ++d)
    for (int i = 0; i < n; ++i) {
      int j = (i + d) % n;
      edges.emplace_back(i, j);
      edge_set.insert(key(i, j));
    }
  for (auto& [u, v] : edges) {
    if (rng.next_double() >= beta) continue;
    if (static_cast<int>(edge_set.size()) >= n * (n - 1) / 2) continue;
    // Node u keeps the edge; the far endpoint moves. Retry until the new
    // edge neither loops nor duplicates; u's degree < n-1 guarantees one.
    bool saturated = true;
    for (int t = 0; t < n; ++t)
      if (t != u && !edge_set.count(key(u, t))) {
        saturated = false;
        break;
      }
    if (saturated) continue;
    for (;;) {
      int t = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
      if (t == u || edge_set.count(key(u, t))) continue;
      edge_set.erase(key(u, v));
      edge_set.insert(key(u, t));
      v = t;
      break;
    }
  }

  SocialNetwork net;
  net.n = n;
  SplitMix64 wrng(derive_stream(seed, kStreamWeights));
  for (auto [u, v] : edges) {
    double raw1;
    double raw2;
    do raw1 = wrng.next_double(); while (raw1 == 0.0);
    do raw2 = wrng.next_double(); while (raw2 == 0.0);
    net.arcs.push_back(Arc{u, v, raw1});
    net.arcs.push_back(Arc{v, u, raw2});
  }
  // Scale weights down wherever a node's incoming sum exceeds one.
  std::vector<double> in_sum(n, 0.0);
  for (const Arc& a : net.arcs) in_sum[a.dst] += a.weight;
  for (Arc& a : net.arcs)
    if (in_sum[a.dst] > 1.0) a.weight /= in_sum[a.dst];

  net.build_index();
  net.validate();
  return net;
}

MsmpInstance gen_msmp(int n, int mean_degree, double beta, int protect_budget,
                      int seed_budget, int scenario_count, std::uint64_t seed) {
  MsmpInstance inst;
  inst.network = gen_watts_strogatz(n, mean_degree, beta, seed);
  inst.protect_budget = protect_budget;
  inst.seed_budget = seed_budget;
  inst.scenario_count = scenario_count;
  inst.seed = seed;
  // Weights round-trip through the text encoding so that solving a freshly
  // generated instance and solving its written file are bit-identical.
  inst = MsmpInstance::parse(inst.to_text());
  inst.validate();
  return inst;
}

ScenarioSet sample_scenarios_lhs(const SocialNetwork& net, int count,
                                 std::uint64_t seed) {
  if (count < 1)
    fail(ErrorKind::invalid_argument, "scenario sampling: count must be >= 1");
  ScenarioSet scen;
  scen.count = count;
  scen.live_pred.assign(count, std::vector<int>(net.n, -1));

  SplitMix64 rng(seed);
  std::vector<int> strata(count);
  for (int j = 0; j < net.n; ++j) {
    // One stratified uniform per scenario for this node, strata permuted
    // independently of other nodes.
    for (int r = 0; r < count; ++r) strata[r] = r;
    for (int r = 0; r < count - 1; ++r) {
      int s = r + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(count - r)));
      std::swap(strata[r], strata[s]);
    }
    for (int r = 0; r < count; ++r) {
      double u = (strata[r] + rng.next_double()) / count;
      double cum = 0.0;
      for (int a : net.in_arcs[j]) {
        cum += net.arcs[a].weight;
        if (u < cum) {
          scen.live_pred[r][j] = net.arcs[a].src;
          break;
        }
      }
    }
  }
  return scen;
}

ScenarioSet instance_scenarios(const MsmpInstance& inst) {
  return sample_scenarios_lhs(inst.network, inst.scenario_count,
                              derive_stream(inst.seed, kStreamScenarios));
}

std::string format_scenarios(const ScenarioSet& scen, int n) {
  std::ostringstream out;
  for (int r = 0; r < scen.count; ++r) {
    out << "scenario " << r << "\n";
    for (int j = 0; j < n; ++j) out << j << " " << scen.live_pred[r][j] << "\n";
  }
  return out.str();
}

std::vector<std::vector<NodeMask>> reach_sets(const MsmpInstance& inst,
                                              const ScenarioSet& scen,
                                              const LeaderVector& w) {
  const int n = inst.network.n;
  const int words = mask_words(n);
  std::vector<char> protected_node(n, 0);
  for (int i : w.support) protected_node[i] = 1;

  std::vector<std::vector<NodeMask>> reach(
      scen.count, std::vector<NodeMask>(n, NodeMask(words, 0)));
  std::vector<std::vector<int>> children(n);
  std::vector<int> stack;
  for (int r = 0; r < scen.count; ++r) {
    // Live forward adjacency with protected nodes removed entirely.
    for (auto& c : children) c.clear();
    for (int j = 0; j < n; ++j) {
      int p = scen.live_pred[r][j];
      if (p >= 0 && !protected_node[p] && !protected_node[j])
        children[p].push_back(j);
    }
    for (int j = 0; j < n; ++j) {
      if (protected_node[j]) continue;
      NodeMask& m = reach[r][j];
      stack.assign(1, j);
      mask_set(m, j);
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int c : children[v])
          if (!mask_test(m, c)) {
            mask_set(m, c);
            stack.push_back(c);
          }
      }
    }
  }
  return reach;
}

MsmpAdapter::MsmpAdapter(MsmpInstance inst) : inst_(std::move(inst)) {
  inst_.validate();
  scenarios_ = instance_scenarios(inst_);
}

namespace {

// Branch-and-bound over seed sets for the weighted maximum-coverage follower.
struct SeedSearch {
  const std::vector<std::vector<NodeMask>>& reach;  // [scenario][node]
  const std::vector<int>& candidates;               // unprotected, ascending
  int scenario_count;
  int words;
  int seed_budget;
  int best = -1;

  // Gain of adding `v` on top of the per-scenario accumulators.
  int gain(const std::vector<NodeMask>& acc, int v) const {
    int g = 0;
    for (int r = 0; r < scenario_count; ++r)
      g += mask_count_new(acc[r], reach[r][v]);
    return g;
  }

  void search(size_t from, std::vector<NodeMask>& acc, int value, int picked) {
    if (value > best) best = value;
    if (picked == seed_budget || from >= candidates.size()) return;

    // Optimistic bound: the sum of the largest remaining marginal gains,
    // each computed against the current coverage only.
    std::vector<int> gains;
    gains.reserve(candidates.size() - from);
    for (size_t i = from; i < candidates.size(); ++i)
      gains.push_back(gain(acc, candidates[i]));
    std::sort(gains.begin(), gains.end(), std::greater<int>());
    int slots = seed_budget - picked;
    int bound = value;
    for (int i = 0; i < slots && i < static_cast<int>(gains.size()); ++i)
      bound += gains[i];
    if (bound <= best) return;

    for (size_t i = from; i < candidates.size(); ++i) {
      int v = candidates[i];
      std::vector<NodeMask> next = acc;
      int g = 0;
      for (int r = 0; r < scenario_count; ++r) {
        g += mask_count_new(next[r], reach[r][v]);
        mask_or(next[r], reach[r][v]);
      }
      if (g == 0) continue;  // adding v changes nothing; supersets dominated
      search(i + 1, next, value + g, picked + 1);
    }
  }
};

}  // namespace

FollowerSample MsmpAdapter::best_response(const LeaderVector& w) const {
  const int n = inst_.network.n;
  const int words = mask_words(n);
  auto reach = reach_sets(inst_, scenarios_, w);

  std::vector<int> candidates;
  for (int v = 0; v < n; ++v)
    if (!w.contains(v)) candidates.push_back(v);

  SeedSearch search{reach, candidates, scenarios_.count, words,
                    std::min<int>(inst_.seed_budget, static_cast<int>(candidates.size()))};
  std::vector<NodeMask> acc(scenarios_.count, NodeMask(words, 0));
  search.search(0, acc, 0, 0);
  const int opt = search.best;

  // Canonical optimal seed set for determinism: ascending greedy extension,
  // committing the smallest candidate with positive marginal gain that keeps
  // the optimum attainable, stopping once the current seeds attain it.
  std::vector<int> seeds;
  std::vector<NodeMask> cur(scenarios_.count, NodeMask(words, 0));
  int cur_value = 0;
  size_t from = 0;
  while (cur_value < opt) {
    bool extended = false;
    for (size_t i = from; i < candidates.size(); ++i) {
      int v = candidates[i];
      std::vector<NodeMask> next = cur;
      int g = 0;
      for (int r = 0; r < scenarios_.count; ++r) {
        g += mask_count_new(next[r], reach[r][v]);
        mask_or(next[r], reach[r][v]);
      }
      if (g == 0) continue;
      // Value reachable with v committed and later candidates optional.
      SeedSearch probe{reach, candidates, scenarios_.count, words,
                       search.seed_budget};
      probe.search(i + 1, next, cur_value + g,
                   static_cast<int>(seeds.size()) + 1);
      if (probe.best == opt) {
        seeds.push_back(v);
        cur = std::move(next);
        cur_value += g;
        from = i + 1;
        extended = true;
        break;
      }
    }
    IXS_CHECK(extended, "seed reconstruction lost the optimum");
  }

  FollowerSample s;
  s.kind = payload_kind();
  s.selection = seeds;
  s.value = Rat(opt, scenarios_.count);

  // Influenced nodes across scenarios form the blocker set: protecting any
  // of them breaks this exact solution. The per-scenario influenced sets are
  // kept on the sample as part of its identity.
  NodeMask influenced(words, 0);
  s.detail.resize(scenarios_.count);
  for (int r = 0; r < scenarios_.count; ++r) {
    NodeMask acc_r(words, 0);
    for (int v : seeds) mask_or(acc_r, reach[r][v]);
    for (int v = 0; v < n; ++v)
      if (mask_test(acc_r, v)) s.detail[r].push_back(v);
    mask_or(influenced, acc_r);
  }
  for (int v = 0; v < n; ++v)
    if (mask_test(influenced, v)) s.blockers.push_back(v);
  return s;
}

bool MsmpAdapter::replay_feasible(const FollowerSample& sample,
                                  const LeaderVector& w) const {
  for (int v : sample.selection)
    if (w.contains(v)) return false;  // seed now protected

  auto original = reach_sets(inst_, scenarios_, sample.origin);
  auto replay = reach_sets(inst_, scenarios_, w);
  const int n = inst_.network.n;
  for (int r = 0; r < scenarios_.count; ++r) {
    NodeMask before(mask_words(n), 0);
    NodeMask after(mask_words(n), 0);
    for (int v : sample.selection) {
      mask_or(before, original[r][v]);
      mask_or(after, replay[r][v]);
    }
    // Every node influenced under the original decision must stay reachable.
    for (size_t word = 0; word < before.size(); ++word)
      if (before[word] & ~after[word]) return false;
  }
  return true;
}

}  // namespace ixs
