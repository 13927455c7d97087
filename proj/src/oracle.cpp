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

#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "util.hpp"

namespace ixs {

namespace {

constexpr std::uint64_t kDefaultGenericCap = 20'000'000;
constexpr std::uint64_t kDefaultBcpCap = 60'000'000'000;
constexpr std::size_t kCliqueTableCap = 4'000'000;

// Number of leader vectors with support size at most g, saturating.
std::uint64_t leader_space_size(int n, int g) {
  const std::uint64_t inf = ~0ULL;
  std::uint64_t total = 0;
  std::uint64_t comb = 1;  // C(n, j)
  for (int j = 0; j <= g; ++j) {
    if (j > 0) {
      if (comb > inf / static_cast<std::uint64_t>(n - j + 1)) return inf;
      comb = comb * static_cast<std::uint64_t>(n - j + 1) /
             static_cast<std::uint64_t>(j);
    }
    if (total > inf - comb) return inf;
    total += comb;
  }
  return total;
}

struct GenericEnumerator {
  const ProblemAdapter& adapter;
  std::optional<OracleResult> best;
  std::vector<int> support;

  void consider(const LeaderVector& w) {
    FollowerSample s = adapter.best_response(w);
    if (!best || s.value < best->z ||
        (s.value == best->z && leader_lex_less(w, best->leader))) {
      if (!best) best.emplace();
      best->z = s.value;
      best->leader = w;
      best->response = std::move(s);
    }
    ++best->enumerated;
  }

  void enumerate(int next) {
    LeaderVector w{adapter.leader_count(), adapter.leader_budget(), support};
    consider(w);
    if (static_cast<int>(support.size()) == adapter.leader_budget()) return;
    for (int i = next; i < adapter.leader_count(); ++i) {
      support.push_back(i);
      enumerate(i + 1);
      support.pop_back();
    }
  }
};

// Mask bitstring order: the mask holding a 0 at the lowest differing edge
// index is smaller, matching leader_lex_less on the corresponding supports.
bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & -diff)) == 0;
}

struct CliqueTable {
  std::vector<std::uint64_t> edge_mask;  // by descending clique size
  std::vector<int> size;
};

// Every clique of the graph (including singletons) as an internal-edge mask.
CliqueTable enumerate_cliques(const BcpInstance& inst) {
  const int n = inst.n;
  const int m = static_cast<int>(inst.edges.size());
  std::vector<std::uint64_t> adj(n, 0);
  std::vector<std::vector<int>> edge_id(n, std::vector<int>(n, -1));
  for (int e = 0; e < m; ++e) {
    auto [u, v] = inst.edges[e];
    adj[u] |= 1ULL << v;
    adj[v] |= 1ULL << u;
    edge_id[u][v] = edge_id[v][u] = e;
  }

  struct Entry {
    std::uint64_t edges;
    int size;
  };
  std::vector<Entry> entries;

  // members/edges accumulate along the recursion path.
  std::vector<int> members;
  auto rec = [&](auto&& self, std::uint64_t allowed, std::uint64_t edges) -> void {
    std::uint64_t rest = allowed;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      std::uint64_t ext = edges;
      for (int u : members) ext |= 1ULL << edge_id[u][v];
      members.push_back(v);
      entries.push_back(Entry{ext, static_cast<int>(members.size())});
      if (entries.size() > kCliqueTableCap)
        fail(ErrorKind::too_large, "instance too large for oracle");
      std::uint64_t mask_above = v == 63 ? 0 : ~((1ULL << (v + 1)) - 1);
      self(self, allowed & adj[v] & mask_above, ext);
      members.pop_back();
    }
  };
  std::uint64_t all = n == 64 ? ~0ULL : ((1ULL << n) - 1);
  rec(rec, all, 0);

  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.size > b.size; });
  CliqueTable table;
  table.edge_mask.reserve(entries.size());
  table.size.reserve(entries.size());
  for (const Entry& e : entries) {
    table.edge_mask.push_back(e.edges);
    table.size.push_back(e.size);
  }
  return table;
}

struct BcpEnumerator {
  const CliqueTable& table;
  int m;
  int best_z = 1 << 30;
  std::uint64_t best_mask = 0;
  std::uint64_t enumerated = 0;

  void consider(std::uint64_t mask, std::size_t surviving) {
    ++enumerated;
    int z = table.size[surviving];
    if (z < best_z || (z == best_z && mask_lex_less(mask, best_mask))) {
      best_z = z;
      best_mask = mask;
    }
  }

  // Enumerates edge subsets of size <= budget in ascending-index order.
  // `surviving` indexes the largest clique untouched by `mask`; it only
  // moves forward when the newly added edge hits that clique. Full-budget
  // subsets are evaluated inline to keep the innermost level a tight loop.
  //
  // Sound pruning that preserves the exact minimum and the lex tie-break:
  // one removal lowers the clique number by at most one, so a subtree whose
  // value cannot even tie the incumbent within its remaining budget holds no
  // update; and supersets are lexicographically larger, so once only
  // singletons survive (the floor) the subtree is dominated.
  void dfs(std::uint64_t mask, int start, int left, std::size_t surviving) {
    consider(mask, surviving);
    int z = table.size[surviving];
    if (left == 0 || z == 1 || z - left > best_z) return;
    const std::uint64_t* emasks = table.edge_mask.data();
    for (int e = start; e < m; ++e) {
      std::uint64_t child = mask | (1ULL << e);
      std::size_t surv = surviving;
      if (emasks[surv] >> e & 1) {
        ++surv;
        while (emasks[surv] & child) ++surv;
      }
      if (left == 1)
        consider(child, surv);
      else
        dfs(child, e + 1, left - 1, surv);
    }
  }
};

OracleResult bcp_oracle(const Instance& inst, std::uint64_t cap) {
  const auto& data = std::get<BcpInstance>(inst.data);
  const int m = static_cast<int>(data.edges.size());
  std::uint64_t space = leader_space_size(m, data.budget);
  if (space > cap) fail(ErrorKind::too_large, "instance too large for oracle");

  CliqueTable table = enumerate_cliques(data);
  // Singletons carry an empty edge mask, so a surviving clique always exists
  // and the forward scan below cannot run off the table.
  IXS_CHECK(!table.size.empty() && table.size.back() == 1,
            "clique table missing singleton sentinels");

  BcpEnumerator en{table, m};
  en.dfs(0, 0, data.budget, 0);

  OracleResult res;
  res.enumerated = en.enumerated;
  BcpAdapter adapter(data);
  std::vector<int> support;
  for (int e = 0; e < m; ++e)
    if (en.best_mask >> e & 1) support.push_back(e);
  res.leader = adapter.make_leader(support);
  res.response = adapter.best_response(res.leader);
  res.response.origin = res.leader;
  res.z = res.response.value;
  IXS_CHECK(res.z == Rat(en.best_z),
            "clique-table optimum disagrees with the follower oracle");
  return res;
}

}  // namespace

OracleResult brute_force_bilevel(const Instance& inst, std::uint64_t cap,
                                 bool force_generic) {
  bool bcp_fast = false;
  if (inst.family == Family::bcp && !force_generic) {
    const auto& data = std::get<BcpInstance>(inst.data);
    bcp_fast = data.edges.size() <= 64;
  }
  if (cap == 0) cap = bcp_fast ? kDefaultBcpCap : kDefaultGenericCap;
  if (bcp_fast) return bcp_oracle(inst, cap);

  auto adapter = inst.make_adapter();
  std::uint64_t space =
      leader_space_size(adapter->leader_count(), adapter->leader_budget());
  if (space > cap) fail(ErrorKind::too_large, "instance too large for oracle");

  GenericEnumerator en{*adapter};
  en.enumerate(0);
  OracleResult res = std::move(*en.best);
  res.response.origin = res.leader;
  return res;
}

}  // namespace ixs
