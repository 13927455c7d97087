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
#include <utility>
#include <vector>

#include "core.hpp"

namespace ixs {

// Clique interdiction: the leader removes up to g edges, the follower then
// finds a maximum clique in what remains. Leader indices are edge indices in
// file order.
//
// Text format: line 1 "n m g" (g = 0 selects the default ceil(m/4)), then m
// lines "u v" with 0-based vertices.
struct BcpInstance {
  int n = 0;
  int budget = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, no duplicates

  void validate() const;
  static BcpInstance parse(const std::string& text);
  std::string to_text() const;
};

// Erdos-Renyi G(n, density) with the default ceil(m/4) budget when g == 0.
BcpInstance gen_bcp(int n, double density, int budget, std::uint64_t seed);

// Exact maximum clique over the vertices allowed by `mask`, branch-and-bound
// with a greedy-coloring bound. Exposed for the adapter and for the
// interdiction oracle's preprocessing.
int max_clique_size(const std::vector<std::uint64_t>& adj, std::uint64_t mask);

// Lexicographically smallest maximum clique (as a sorted vertex list).
std::vector<int> max_clique_lex(const std::vector<std::uint64_t>& adj, int n);

class BcpAdapter : public ProblemAdapter {
 public:
  explicit BcpAdapter(BcpInstance inst);

  std::string family() const override { return "bcp"; }
  std::string payload_kind() const override { return "clique"; }
  int leader_count() const override { return static_cast<int>(inst_.edges.size()); }
  int leader_budget() const override { return inst_.budget; }
  // The trivial solution is the empty clique: single vertices differ per
  // vertex, so only the empty selection is feasible under every leader.
  Rat trivial_value() const override { return Rat(0); }

  // Maximum clique of the graph with the interdicted edges removed; blockers
  // are the edges with both endpoints inside the clique.
  FollowerSample best_response(const LeaderVector& w) const override;

  const BcpInstance& instance() const { return inst_; }

 private:
  BcpInstance inst_;
  std::vector<std::uint64_t> adj_;
};

}  // namespace ixs
