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

#include "doctest.h"

#include "bcp.hpp"
#include "helpers.hpp"
#include "rng.hpp"

using namespace ixs;

namespace {

BcpInstance triangle() {
  BcpInstance inst;
  inst.n = 3;
  inst.budget = 1;
  inst.edges = {{0, 1}, {0, 2}, {1, 2}};
  return inst;
}

std::vector<std::uint64_t> adjacency(const BcpInstance& inst) {
  std::vector<std::uint64_t> adj(inst.n, 0);
  for (auto [u, v] : inst.edges) {
    adj[u] |= 1ULL << v;
    adj[v] |= 1ULL << u;
  }
  return adj;
}

}  // namespace

TEST_CASE("complete graph clique is everything") {
  BcpAdapter adapter(triangle());
  auto s = adapter.best_response(adapter.empty_leader());
  CHECK(s.value == Rat(3));
  CHECK(s.selection == std::vector<int>{0, 1, 2});
  CHECK(s.blockers == std::vector<int>{0, 1, 2});  // all three edges internal
}

TEST_CASE("removing one triangle edge drops the clique to an edge") {
  BcpAdapter adapter(triangle());
  auto s = adapter.best_response(adapter.make_leader({0}));  // cut {0,1}
  CHECK(s.value == Rat(2));
  CHECK(s.selection == std::vector<int>{0, 2});  // lex-smallest 2-clique
  CHECK(s.blockers == std::vector<int>{1});      // only edge {0,2} is internal
}

TEST_CASE("edgeless graphs still have single-vertex cliques") {
  BcpInstance inst;
  inst.n = 4;
  inst.budget = 0;
  BcpAdapter adapter(inst);
  auto s = adapter.best_response(adapter.empty_leader());
  CHECK(s.value == Rat(1));
  CHECK(s.selection == std::vector<int>{0});
  CHECK(s.blockers.empty());  // no internal edge: unblockable by edge removal
}

TEST_CASE("text format applies the default budget rule") {
  auto inst = BcpInstance::parse("3 3 0\n0 1\n0 2\n1 2\n");
  CHECK(inst.budget == 1);  // ceil(3/4)
  auto round = BcpInstance::parse(inst.to_text());
  CHECK(round.edges == inst.edges);
  CHECK(round.budget == inst.budget);

  CHECK_THROWS_AS(BcpInstance::parse("2 1 0\n0 0\n"), Error);           // loop
  CHECK_THROWS_AS(BcpInstance::parse("2 2 0\n0 1\n1 0\n"), Error);      // dup
  CHECK_THROWS_AS(BcpInstance::parse("2 1 5\n0 1\n"), Error);           // g > m
}

TEST_CASE("clique solver matches subset enumeration on random graphs") {
  SplitMix64 rng(31337);
  const double densities[] = {0.2, 0.5, 0.8};
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + static_cast<int>(rng.next_below(10));  // up to 12
    double d = densities[rng.next_below(3)];
    BcpInstance inst = gen_bcp(n, d, 0, rng.next());
    auto adj = adjacency(inst);

    std::uint64_t all = (1ULL << n) - 1;
    int expect = testing::clique_enum(adj, n);
    CHECK(max_clique_size(adj, all) == expect);

    auto lex = max_clique_lex(adj, n);
    CHECK(static_cast<int>(lex.size()) == expect);
    for (size_t a = 0; a < lex.size(); ++a)
      for (size_t b = a + 1; b < lex.size(); ++b)
        CHECK((adj[lex[a]] >> lex[b] & 1) == 1);
  }
}

TEST_CASE("blocker indices always reference instance edges") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    BcpInstance inst = gen_bcp(6 + static_cast<int>(rng.next_below(4)), 0.6, 0,
                               rng.next());
    BcpAdapter adapter(inst);
    int m = static_cast<int>(inst.edges.size());
    auto sub = rng.next_subset(m, std::min(m, inst.budget));
    auto s = adapter.best_response(adapter.make_leader(sub));
    for (int e : s.blockers) {
      CHECK(e >= 0);
      CHECK(e < m);
      auto [u, v] = inst.edges[e];
      CHECK(std::binary_search(s.selection.begin(), s.selection.end(), u));
      CHECK(std::binary_search(s.selection.begin(), s.selection.end(), v));
    }
  }
}
