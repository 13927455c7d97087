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

// Reference oracles for property tests. Everything here is deliberately
// brute force and independent of the implementation paths it checks.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "bcp.hpp"
#include "bkp.hpp"
#include "cover.hpp"
#include "msmp.hpp"

namespace ixs::testing {

// Exhaustive 0-1 knapsack over the items not in `banned`.
inline std::int64_t knapsack_enum(const BkpInstance& inst,
                                  const std::vector<int>& banned) {
  std::uint32_t banned_mask = 0;
  for (int i : banned) banned_mask |= 1u << i;
  std::int64_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << inst.n); ++mask) {
    if (mask & banned_mask) continue;
    std::int64_t wsum = 0, psum = 0;
    for (int i = 0; i < inst.n; ++i)
      if (mask >> i & 1) {
        wsum += inst.weight[i];
        psum += inst.profit[i];
      }
    if (wsum <= inst.capacity && psum > best) best = psum;
  }
  return best;
}

// Exhaustive maximum clique via subset enumeration (n <= ~20).
inline int clique_enum(const std::vector<std::uint64_t>& adj, int n) {
  int best = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      if (mask >> u & 1)
        if ((mask & adj[u]) != (mask & ~(1ULL << u))) ok = false;
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

// Influenced-node count (over all scenarios) when `seeds` start the spread
// under leader `w`; direct per-scenario flood on the live predecessors.
inline int spread_enum(const MsmpInstance& inst, const ScenarioSet& scen,
                       const std::vector<int>& protected_nodes,
                       const std::vector<int>& seeds) {
  const int n = inst.network.n;
  std::vector<char> prot(n, 0);
  for (int i : protected_nodes) prot[i] = 1;
  int total = 0;
  for (int r = 0; r < scen.count; ++r) {
    std::vector<char> influenced(n, 0);
    std::vector<int> stack;
    for (int s : seeds)
      if (!prot[s] && !influenced[s]) {
        influenced[s] = 1;
        stack.push_back(s);
      }
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j)
        if (!influenced[j] && !prot[j] && scen.live_pred[r][j] == v) {
          influenced[j] = 1;
          stack.push_back(j);
        }
    }
    for (int j = 0; j < n; ++j) total += influenced[j];
  }
  return total;
}

// Exhaustive follower optimum for MSMP: best <= k seed set among unprotected
// nodes by direct enumeration.
inline int msmp_follower_enum(const MsmpInstance& inst, const ScenarioSet& scen,
                              const std::vector<int>& protected_nodes) {
  const int n = inst.network.n;
  std::vector<char> prot(n, 0);
  for (int i : protected_nodes) prot[i] = 1;
  std::vector<int> candidates;
  for (int v = 0; v < n; ++v)
    if (!prot[v]) candidates.push_back(v);
  int k = std::min<int>(inst.seed_budget, candidates.size());

  int best = 0;
  std::vector<int> pick;
  auto rec = [&](auto&& self, size_t from, int left) -> void {
    best = std::max(best, spread_enum(inst, scen, protected_nodes, pick));
    if (left == 0) return;
    for (size_t i = from; i < candidates.size(); ++i) {
      pick.push_back(candidates[i]);
      self(self, i + 1, left - 1);
      pick.pop_back();
    }
  };
  rec(rec, 0, k);
  return best;
}

struct CoverEnumAnswer {
  bool fully_coverable = false;
  bool mandatory_hittable = false;
};

// Exhaustive answer for a covering problem: enumerate all <= budget subsets.
inline CoverEnumAnswer cover_enum(const CoverProblem& p) {
  CoverEnumAnswer ans;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from, int left) -> void {
    bool all = true, mand = true;
    for (const CoverSet& s : p.sets()) {
      bool hit = false;
      for (int i : pick)
        if (std::binary_search(s.indices.begin(), s.indices.end(), i)) {
          hit = true;
          break;
        }
      if (!hit) {
        all = false;
        if (s.mandatory) mand = false;
      }
    }
    ans.fully_coverable = ans.fully_coverable || all;
    ans.mandatory_hittable = ans.mandatory_hittable || mand;
    if (left == 0) return;
    for (int i = from; i < p.ground_n(); ++i) {
      pick.push_back(i);
      self(self, i + 1, left - 1);
      pick.pop_back();
    }
  };
  rec(rec, 0, p.budget());
  return ans;
}

// Exhaustive bilevel optimum by leader enumeration through the adapter.
inline Rat bilevel_enum(const ProblemAdapter& adapter) {
  std::optional<Rat> best;
  std::vector<int> support;
  auto rec = [&](auto&& self, int from, int left) -> void {
    LeaderVector w{adapter.leader_count(), adapter.leader_budget(), support};
    Rat z = adapter.best_response(w).value;
    if (!best || z < *best) best = z;
    if (left == 0) return;
    for (int i = from; i < adapter.leader_count(); ++i) {
      support.push_back(i);
      self(self, i + 1, left - 1);
      support.pop_back();
    }
  };
  rec(rec, 0, adapter.leader_budget());
  return *best;
}

}  // namespace ixs::testing
