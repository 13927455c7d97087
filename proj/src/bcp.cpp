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

#include "bcp.hpp"

#include <bit>
#include <sstream>

#include "rng.hpp"
#include "util.hpp"

namespace ixs {

namespace {

constexpr int kMaxVertices = 64;  // vertex sets are single 64-bit masks

struct CliqueSearch {
  const std::vector<std::uint64_t>& adj;
  int best = 0;

  // Greedy colouring of the candidate set; vertices come back grouped by
  // colour so "clique size + colour index" bounds the reachable clique while
  // scanning the candidates in reverse.
  void order_by_colour(std::uint64_t mask, std::vector<int>& order,
                       std::vector<int>& bound) const {
    order.clear();
    bound.clear();
    int colour = 0;
    while (mask) {
      ++colour;
      std::uint64_t colour_class = mask;
      while (colour_class) {
        int v = std::countr_zero(colour_class);
        order.push_back(v);
        bound.push_back(colour);
        mask &= ~(1ULL << v);
        colour_class &= ~(1ULL << v);
        colour_class &= ~adj[v];
      }
    }
  }

  void expand(std::uint64_t cand, int size) {
    if (cand == 0) {
      if (size > best) best = size;
      return;
    }
    std::vector<int> order, bound;
    order_by_colour(cand, order, bound);
    std::uint64_t work = cand;
    for (int k = static_cast<int>(order.size()) - 1; k >= 0; --k) {
      if (size + bound[k] <= best) return;
      int v = order[k];
      work &= ~(1ULL << v);
      expand(work & adj[v], size + 1);
    }
  }
};

}  // namespace

int max_clique_size(const std::vector<std::uint64_t>& adj, std::uint64_t mask) {
  CliqueSearch search{adj};
  search.expand(mask, 0);
  return search.best;
}

std::vector<int> max_clique_lex(const std::vector<std::uint64_t>& adj, int n) {
  std::uint64_t all = n == 64 ? ~0ULL : ((1ULL << n) - 1);
  int omega = max_clique_size(adj, all);

  // Grow the clique vertex by vertex: take the smallest candidate that still
  // extends to a maximum clique among larger-indexed common neighbours.
  std::vector<int> clique;
  std::uint64_t cand = all;
  int need = omega;
  for (int v = 0; v < n && need > 0; ++v) {
    if (!(cand & (1ULL << v))) continue;
    std::uint64_t rest = cand & adj[v] & ~((v == 63) ? ~0ULL : ((1ULL << (v + 1)) - 1));
    if (1 + max_clique_size(adj, rest) >= need) {
      clique.push_back(v);
      cand = rest;
      --need;
    }
  }
  IXS_CHECK(static_cast<int>(clique.size()) == omega,
            "lexicographic clique reconstruction lost the optimum");
  return clique;
}

void BcpInstance::validate() const {
  if (n < 1) fail(ErrorKind::invalid_argument, "bcp: need at least one vertex");
  if (n > kMaxVertices)
    fail(ErrorKind::too_large, "bcp: at most 64 vertices supported");
  if (budget < 0 || budget > static_cast<int>(edges.size()))
    fail(ErrorKind::invalid_argument, "bcp: budget outside [0, |E|]");
  std::vector<std::uint64_t> seen(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      fail(ErrorKind::invalid_argument, "bcp: vertex out of range");
    if (u == v) fail(ErrorKind::invalid_argument, "bcp: self-loop");
    if (u > v) std::swap(u, v);
    if (seen[u] & (1ULL << v))
      fail(ErrorKind::invalid_argument, "bcp: duplicate edge");
    seen[u] |= 1ULL << v;
  }
}

BcpInstance BcpInstance::parse(const std::string& text) {
  TokenReader r(text, "bcp instance");
  BcpInstance inst;
  inst.n = static_cast<int>(r.next_int("n"));
  int m = static_cast<int>(r.next_int("m"));
  inst.budget = static_cast<int>(r.next_int("g"));
  if (m < 0) fail(ErrorKind::parse, "bcp: negative edge count");
  for (int e = 0; e < m; ++e) {
    int u = static_cast<int>(r.next_int("edge endpoint"));
    int v = static_cast<int>(r.next_int("edge endpoint"));
    if (u > v) std::swap(u, v);
    inst.edges.emplace_back(u, v);
  }
  r.expect_done();
  if (inst.budget == 0) inst.budget = (m + 3) / 4;  // default ceil(|E|/4)
  inst.validate();
  return inst;
}

std::string BcpInstance::to_text() const {
  std::ostringstream out;
  out << n << " " << edges.size() << " " << budget << "\n";
  for (auto [u, v] : edges) out << u << " " << v << "\n";
  return out.str();
}

BcpInstance gen_bcp(int n, double density, int budget, std::uint64_t seed) {
  if (n < 1 || n > kMaxVertices)
    fail(ErrorKind::invalid_argument, "gen bcp: n outside [1, 64]");
  if (density < 0.0 || density > 1.0)
    fail(ErrorKind::invalid_argument, "gen bcp: density outside [0, 1]");
  BcpInstance inst;
  inst.n = n;
  SplitMix64 rng(seed);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_double() < density) inst.edges.emplace_back(u, v);
  int m = static_cast<int>(inst.edges.size());
  inst.budget = budget == 0 ? (m + 3) / 4 : budget;
  if (inst.budget > m) inst.budget = m;
  inst.validate();
  return inst;
}

BcpAdapter::BcpAdapter(BcpInstance inst) : inst_(std::move(inst)) {
  inst_.validate();
  adj_.assign(inst_.n, 0);
  for (auto [u, v] : inst_.edges) {
    adj_[u] |= 1ULL << v;
    adj_[v] |= 1ULL << u;
  }
}

FollowerSample BcpAdapter::best_response(const LeaderVector& w) const {
  std::vector<std::uint64_t> adj = adj_;
  for (int e : w.support) {
    auto [u, v] = inst_.edges[e];
    adj[u] &= ~(1ULL << v);
    adj[v] &= ~(1ULL << u);
  }

  FollowerSample s;
  s.kind = payload_kind();
  s.selection = max_clique_lex(adj, inst_.n);
  s.value = Rat(static_cast<std::int64_t>(s.selection.size()));

  std::uint64_t members = 0;
  for (int v : s.selection) members |= 1ULL << v;
  for (int e = 0; e < static_cast<int>(inst_.edges.size()); ++e) {
    auto [u, v] = inst_.edges[e];
    if ((members >> u & 1) && (members >> v & 1)) s.blockers.push_back(e);
  }
  return s;
}

}  // namespace ixs
